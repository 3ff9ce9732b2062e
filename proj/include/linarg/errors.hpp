#pragma once

#include <stdexcept>
#include <string>

namespace linarg {

// Element/context shape disagreement (wrong payload length, wrong algebra).
class shape_error : public std::invalid_argument {
public:
  explicit shape_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Invalid parameters or scenario constraint violations; messages name the
// offending key or inequality.
class config_error : public std::invalid_argument {
public:
  explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Unexpected numeric breakdown (NaN coefficients, etc.).
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace linarg
