// Copyright 2026 The moometrics Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOOMETRICS_ERRORS_H_
#define MOOMETRICS_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace moometrics {

// A metric whose denominator is zero where the formula gives no fallback.
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A scope (use case, class, package, entity) that is not in the input.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An input file that could not be opened or read at all.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class IngestErrorKind { kFormat, kReference, kDuplicate };

// Positioned error from one of the declarative input formats.
class IngestError : public std::runtime_error {
 public:
  IngestError(std::string path, int line, IngestErrorKind kind,
              const std::string& message);

  const std::string& path() const { return path_; }
  int line() const { return line_; }
  IngestErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  int line_;
  IngestErrorKind kind_;
  std::string message_;
};

// Bad threshold configuration: unknown key, malformed value, or a bound that
// lies outside the range of its metric. `line` is 0 for bounds set in code.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, int line, const std::string& message);

  const std::string& path() const { return path_; }
  int line() const { return line_; }

 private:
  std::string path_;
  int line_;
};

// A trace event naming a method, point, or branch the model does not have.
class TraceReferenceError : public std::runtime_error {
 public:
  TraceReferenceError(std::string path, int line, std::string id);

  const std::string& path() const { return path_; }
  int line() const { return line_; }
  const std::string& id() const { return id_; }

 private:
  std::string path_;
  int line_;
  std::string id_;
};

// Declared checklist facts that were required but not supplied.
class MissingFactsError : public std::runtime_error {
 public:
  explicit MissingFactsError(std::vector<std::string> ids);

  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
};

}  // namespace moometrics

#endif  // MOOMETRICS_ERRORS_H_
