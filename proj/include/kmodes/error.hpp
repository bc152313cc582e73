#pragma once

#include <stdexcept>

namespace kmodes {

// Base type for all toolkit failures; callers that do not care about the
// category can catch this alone.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file (ragged rows, empty input).
struct ParseError : Error {
    using Error::Error;
};

// Schema inconsistent with the file it describes.
struct SchemaError : Error {
    using Error::Error;
};

// Invalid run parameters (k, runs, max_iters, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Vector length or table shape mismatch.
struct DimensionError : Error {
    using Error::Error;
};

// Evaluation requested without ground-truth labels.
struct EvalError : Error {
    using Error::Error;
};

// File or sink I/O failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace kmodes
