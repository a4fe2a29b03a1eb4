#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include <complex>

namespace rgbp {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define RGBP_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

// (n, a) outside the admissible range of the asymptotic theory.
RGBP_DEFINE_ERROR(ParameterOutOfRange);
RGBP_DEFINE_ERROR(InvalidDegree);
RGBP_DEFINE_ERROR(OnBranchCut);
RGBP_DEFINE_ERROR(TurningPointProximity);
RGBP_DEFINE_ERROR(ZetaVanishes);
RGBP_DEFINE_ERROR(NonpositiveIndex);
RGBP_DEFINE_ERROR(NewtonDivergence);
RGBP_DEFINE_ERROR(ZeroArgument);
RGBP_DEFINE_ERROR(StepTooLarge);
RGBP_DEFINE_ERROR(IterationDivergence);

#undef RGBP_DEFINE_ERROR

// Failures that carry the indices they apply to.
class IndexedError : public Error {
 public:
  IndexedError(std::string kind, const std::string& what, std::vector<int> indices)
      : Error(std::move(kind), what), indices_(std::move(indices)) {}

  const std::vector<int>& indices() const noexcept { return indices_; }

 private:
  std::vector<int> indices_;
};

class OracleNoConvergence : public IndexedError {
 public:
  OracleNoConvergence(const std::string& what, std::vector<int> indices)
      : IndexedError("OracleNoConvergence", what, std::move(indices)) {}
};

// Raised by approx_all when one or more indices fail; messages are per index.
class ApproxFailure : public IndexedError {
 public:
  ApproxFailure(const std::string& what, std::vector<int> indices,
                std::vector<std::string> messages)
      : IndexedError("ApproxFailure", what, std::move(indices)),
        messages_(std::move(messages)) {}

  const std::vector<std::string>& messages() const noexcept { return messages_; }

 private:
  std::vector<std::string> messages_;
};

// A sweep that could not continue; zeros() holds what was accepted so far.
class SweepStalled : public Error {
 public:
  SweepStalled(const std::string& what, std::vector<std::complex<double>> partial)
      : Error("SweepStalled", what), partial_(std::move(partial)) {}

  const std::vector<std::complex<double>>& zeros() const noexcept { return partial_; }

 private:
  std::vector<std::complex<double>> partial_;
};

}  // namespace rgbp
