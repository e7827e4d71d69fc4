#pragma once

#include <stdexcept>
#include <string>

namespace chainsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidChain : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Requested model cannot be handled by the engine (e.g. long-range couplings
// given to the free-fermion engine).
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

// Dense Hilbert-space size above the configured oracle cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Too few phase steps to separate the coherence orders present.
class AliasingError : public Error {
 public:
  using Error::Error;
};

// Analytic and dense engines disagree beyond tolerance.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace chainsim
