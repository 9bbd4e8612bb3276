#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrivialWordError : public Error {
 public:
  TrivialWordError() : Error("word reduces to the identity") {}
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::size_t reached, int iteration = -1)
      : Error("letter budget exceeded (reached " + std::to_string(reached) +
              (iteration >= 0 ? ", iteration " + std::to_string(iteration) : std::string()) + ")"),
        reached_(reached),
        iteration_(iteration) {}
  std::size_t reached() const { return reached_; }
  int iteration() const { return iteration_; }

 private:
  std::size_t reached_;
  int iteration_;
};

class RankMismatchError : public Error {
 public:
  RankMismatchError() : Error("rank mismatch") {}
};

class NotInvertibleError : public Error {
 public:
  NotInvertibleError() : Error("automorphism carries no inverse witness (factors or inverse images)") {}
};

class NotUnimodularError : public Error {
 public:
  explicit NotUnimodularError(long long det)
      : Error("matrix is not unimodular (det = " + std::to_string(det) + ")"), det_(det) {}
  long long det() const { return det_; }

 private:
  long long det_;
};

class RadiusMismatchError : public Error {
 public:
  RadiusMismatchError() : Error("windowed currents have different basis or radius") {}
};

class EllipticInputError : public Error {
 public:
  EllipticInputError() : Error("input word is elliptic in the splitting") {}
};

class HypothesisUnmetError : public Error {
 public:
  explicit HypothesisUnmetError(const std::string& what) : Error("hypothesis unmet: " + what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("invalid configuration: " + what) {}
};

class ScheduleExhaustedError : public Error {
 public:
  explicit ScheduleExhaustedError(const std::string& what) : Error("schedule exhausted: " + what) {}
};

class ArithmeticOverflowError : public Error {
 public:
  ArithmeticOverflowError() : Error("integer overflow in exact arithmetic") {}
};

}  // namespace fg
