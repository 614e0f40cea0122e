#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace formcheck {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // A table failed a group axiom. The witness holds the offending
  // element indices; unused slots are -1.
  class NotAGroup : public Error {
   public:
    NotAGroup(std::string const& what, std::array<long, 3> witness)
        : Error(what), witness_(witness) {}

    std::array<long, 3> const& witness() const noexcept {
      return witness_;
    }

   private:
    std::array<long, 3> witness_;
  };

  class OrderCapExceeded : public Error {
   public:
    using Error::Error;
  };

  class SearchBudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  class LatticeBudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // Conjugation witness: g^-1 n g is not in the subgroup.
  class NotNormal : public Error {
   public:
    NotNormal(std::string const& what, long g, long n)
        : Error(what), g_(g), n_(n) {}

    long conjugator() const noexcept {
      return g_;
    }
    long element() const noexcept {
      return n_;
    }

   private:
    long g_;
    long n_;
  };

  // l does not fix the coset hK under conjugation.
  class NotCentralized : public Error {
   public:
    NotCentralized(std::string const& what, long l, long h)
        : Error(what), l_(l), h_(h) {}

    long acting() const noexcept {
      return l_;
    }
    long element() const noexcept {
      return h_;
    }

   private:
    long l_;
    long h_;
  };

  class FormationLawViolated : public Error {
   public:
    using Error::Error;
  };

  class HypercentreNotHypercentral : public Error {
   public:
    using Error::Error;
  };

  class UnknownFormation : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line)
        : Error(line == 0 ? what
                          : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

}  // namespace formcheck
