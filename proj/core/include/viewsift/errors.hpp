#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace viewsift {

// Invalid or infeasible configuration (simulator, online detector, CLI).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Attack volume violates the per-IP daily rate cap of its method.
class RateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degenerate training data (e.g. all examples share one label).
class TrainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A record fell outside the online detector's current window. The caller
// rotates (record_window > current_window) or drops the late record.
class WindowError : public std::runtime_error {
 public:
  WindowError(int64_t record_window, int64_t current_window)
      : std::runtime_error("record outside current window (record window " +
                           std::to_string(record_window) + ", current " +
                           std::to_string(current_window) + ")"),
        record_window(record_window),
        current_window(current_window) {}

  int64_t record_window;
  int64_t current_window;
};

}  // namespace viewsift
