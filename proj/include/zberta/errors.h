// Copyright 2026 The zberta Authors.
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

#ifndef ZBERTA_ERRORS_H_
#define ZBERTA_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zberta {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Malformed input text. Carries the 1-based line number when known (0 = n/a).
class ParseError : public Error {
 public:
  ParseError(const std::string &what, size_t line)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Structurally invalid data (broken dependency tree, bad distribution, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A caller violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Invalid argument values (zero vectors, dimension mismatch, empty lists).
class InputError : public Error {
 public:
  using Error::Error;
};

// Missing or inconsistent configuration (lexicon not loaded, bad config).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Network failure, timeout or non-200 reply from a remote backend.
class TransportError : public Error {
 public:
  using Error::Error;
};

// A remote backend answered with a payload that violates its protocol.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Lookup of a word that has no entry.
class LookupError : public Error {
 public:
  using Error::Error;
};

class ClassificationError : public Error {
 public:
  using Error::Error;
};

class ExtractionError : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

// Too many records failed in a batch transformation.
class CorpusError : public Error {
 public:
  using Error::Error;
};

}  // namespace zberta

#endif  // ZBERTA_ERRORS_H_
