#pragma once

#include <stdexcept>
#include <string>

namespace rajchman {

// Malformed or inconsistent input (bad measure/operator spec, invalid
// arguments). Maps to CLI exit code 2.
struct spec_error : std::runtime_error {
  explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested index or horizon exceeds what the chosen resolution can
// deliver reliably. Maps to CLI exit code 3.
struct resolution_error : std::runtime_error {
  explicit resolution_error(const std::string& what)
      : std::runtime_error(what) {}
};

// An internal consistency check failed. Maps to CLI exit code 4.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rajchman
