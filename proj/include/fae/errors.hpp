#pragma once

#include <stdexcept>
#include <string>

namespace fae {

/// Unreadable or malformed input data (files, rows, values).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Schema that violates its own invariants or disagrees with the data.
class SchemaError : public DataError {
 public:
  using DataError::DataError;
};

/// A metric that is undefined on the given counts, e.g. a group with no
/// positive instances.
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fae
