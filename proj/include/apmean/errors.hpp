#ifndef APMEAN_ERRORS_HPP
#define APMEAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apmean {

struct OutOfDomain : std::runtime_error {
  explicit OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveH : std::invalid_argument {
  explicit NonPositiveH(double h)
      : std::invalid_argument("mean window h must be positive, got " + std::to_string(h)) {}
};

struct NonPositiveL : std::invalid_argument {
  explicit NonPositiveL(double l)
      : std::invalid_argument("Stepanoff window l must be positive, got " + std::to_string(l)) {}
};

struct BadP : std::invalid_argument {
  explicit BadP(double p)
      : std::invalid_argument("exponent p must be >= 1, got " + std::to_string(p)) {}
};

struct EmptyWindow : std::invalid_argument {
  explicit EmptyWindow(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyRange : std::invalid_argument {
  explicit EmptyRange(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainNotSymmetric : std::runtime_error {
  explicit DomainNotSymmetric(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroFrequencyPresent : std::invalid_argument {
  ZeroFrequencyPresent()
      : std::invalid_argument("trig polynomial has a zero frequency; its integral is unbounded") {}
};

struct UnsupportedTag : std::invalid_argument {
  explicit UnsupportedTag(const std::string& what) : std::invalid_argument(what) {}
};

struct OrderTooHigh : std::invalid_argument {
  explicit OrderTooHigh(int order, int max_order)
      : std::invalid_argument("derivative order " + std::to_string(order) +
                              " exceeds supported maximum " + std::to_string(max_order)) {}
};

struct KernelZeroAtOmega : std::runtime_error {
  explicit KernelZeroAtOmega(double omega)
      : std::runtime_error("test function transform vanishes at omega = " + std::to_string(omega)) {}
};

struct UnknownName : std::invalid_argument {
  explicit UnknownName(const std::string& name)
      : std::invalid_argument("unknown name: " + name) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, long line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line(line) {}
  long line;
};

struct IOError : std::runtime_error {
  explicit IOError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace apmean

#endif
