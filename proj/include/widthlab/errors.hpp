#pragma once

#include <stdexcept>
#include <string>

namespace widthlab {

// Bad (domain, basis, parameter) combinations and malformed experiment setups.
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A finite section is too small for the requested range of widths.
class truncation_error : public std::runtime_error {
public:
  explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

// Singular/degenerate input where an injective operator is required.
class degeneracy_error : public std::runtime_error {
public:
  explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

// A representation cannot answer the request (e.g. point values of a
// coefficient-only right-hand side with no synthesis rule).
class capability_error : public std::runtime_error {
public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure with diagnostic payload (non-PD Gram, no certified
// equioscillation candidate, ...).
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace widthlab
