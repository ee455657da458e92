#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace douglas {

// Thrown when an integrand returns a non-finite value; carries the node.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(std::string what, std::vector<double> node, std::size_t node_index)
      : std::runtime_error(std::move(what)), node_(std::move(node)), node_index_(node_index) {}

  const std::vector<double>& node() const noexcept { return node_; }
  std::size_t node_index() const noexcept { return node_index_; }

 private:
  std::vector<double> node_;
  std::size_t node_index_;
};

// Parse failure with the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string what, std::size_t offset)
      : std::runtime_error(std::move(what)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A requested computation is inconsistent with the configuration
// (coincident quadrature nodes, failed orientation validation, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace douglas
