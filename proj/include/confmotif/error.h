//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_ERROR_H_
#define CONFMOTIF_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace confmotif {

class Error: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; line is 1-based, 0 when unknown.
class ParseError: public Error {
public:
  ParseError(const std::string &what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) { }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// A molecule violating a structural invariant (connectivity, valence, ...).
class InvalidMoleculeError: public Error {
public:
  using Error::Error;
};

class SerializationError: public Error {
public:
  using Error::Error;
};

// Degenerate or inconsistent geometric input.
class GeometryError: public Error {
public:
  using Error::Error;
};

class AttachError: public Error {
public:
  enum class Reason {
    kKindMismatch,
    kInvalidSite,
    kValence,
    kMergeConflict,
    kClash,
  };

  AttachError(Reason reason, const std::string &what)
      : Error(what), reason_(reason) { }

  Reason reason() const noexcept { return reason_; }

private:
  Reason reason_;
};

// First-motif placement failure (clash or exhausted pose retries).
class PlacementError: public Error {
public:
  using Error::Error;
};

// A policy returned a choice outside the offered candidate set.
class ContractError: public Error {
public:
  using Error::Error;
};

class MetricError: public Error {
public:
  using Error::Error;
};

}  // namespace confmotif

#endif  // CONFMOTIF_ERROR_H_
