#pragma once

#include <stdexcept>
#include <string>

namespace epik {

// Base class for all failures caused by user-provided input (files, flags,
// parameter combinations). The CLI maps these to a distinct exit code so
// scripts can tell bad data from internal bugs.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A genotype value outside {0, 1, 2}.
class InvalidGenotypeError : public DataError {
public:
    using DataError::DataError;
};

// Two genotype tables with different sample counts cannot be combined.
class IncompatibleTablesError : public DataError {
public:
    using DataError::DataError;
};

// A contingency table with no observations.
class EmptyTableError : public DataError {
public:
    using DataError::DataError;
};

// Count list does not sum to the stated total.
class InconsistentCountsError : public DataError {
public:
    using DataError::DataError;
};

// An exact integer computation does not fit a 64-bit counter.
class OverflowError : public DataError {
public:
    using DataError::DataError;
};

// Interaction order outside the usable range for the dataset.
class InvalidOrderError : public DataError {
public:
    using DataError::DataError;
};

// Malformed input file; message carries path and line number.
class ParseError : public DataError {
public:
    using DataError::DataError;
};

// Result files that cannot be merged (e.g. different interaction orders).
class IncompatibleResultsError : public DataError {
public:
    using DataError::DataError;
};

// Synthetic dataset generation cannot satisfy the requested parameters.
class GenerationError : public DataError {
public:
    using DataError::DataError;
};

} // namespace epik
