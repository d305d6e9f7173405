/*
 * Copyright 2026 The equisplit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace equisplit {

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A boundary loop or split system failed a structural check.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, double gap)
      : std::runtime_error(what), gap_(gap) {}

  /// Largest head-to-tail gap found between consecutive pieces.
  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

/// Malformed topology file. `line()` is 1-based; 0 means "whole file".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::int64_t limit)
      : std::runtime_error(what), limit_(limit) {}

  /// The largest input size the operation accepts.
  std::int64_t limit() const noexcept { return limit_; }

 private:
  std::int64_t limit_;
};

/// Newton-type solver failure; carries the iterate history.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<std::string> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}

  const std::vector<std::string>& trace() const noexcept { return trace_; }

 private:
  std::vector<std::string> trace_;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace equisplit
