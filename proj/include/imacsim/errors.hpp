#pragma once

#include <stdexcept>
#include <string>

namespace imac {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration / input validation.
struct SchemaError : Error { using Error::Error; };          // malformed document, unknown key
struct ValidationError : Error { using Error::Error; };      // invariant violated, message names the field
struct UnknownTechnology : Error { using Error::Error; };

// Dataset / weight ingestion.
struct BadMagic : Error { using Error::Error; };
struct TruncatedStream : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct MissingFile : Error { using Error::Error; };
struct NonFiniteValue : Error { using Error::Error; };
struct OutOfRangePixel : Error { using Error::Error; };

// Mapping / circuit construction.
struct NonFiniteWeight : Error { using Error::Error; };
struct PartitionTooFine : Error { using Error::Error; };
struct TopologyMismatch : Error { using Error::Error; };

// Netlist subset parser.
struct ParseError : Error { using Error::Error; };
struct UnsupportedCard : Error { using Error::Error; };

// Numerics.
struct ConvergenceFailure : Error { using Error::Error; };
struct DivergenceDetected : Error { using Error::Error; };

}  // namespace imac
