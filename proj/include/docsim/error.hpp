#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace docsim {

/// Malformed input file. Carries the 1-based line number when one applies (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : std::runtime_error(format(source, line, what)),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& what) {
    std::string out = source;
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": " + what;
  }

  std::string source_;
  std::size_t line_;
};

/// A required asset (taxonomy, embedding table, corpus, dataset) could not be opened.
class AssetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad run configuration (config file syntax, unknown method, invalid weights).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A statistic is undefined for the given input (e.g. correlation with a constant series).
class UndefinedResultError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative solver ran out of iterations before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (achieved residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace docsim
