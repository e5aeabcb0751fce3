#ifndef ZDGRAPH_ERROR_HPP_
#define ZDGRAPH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdg {

  //! Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Bad argument to a constructor or operation (n = 0, unknown vertex, ...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! A construction would exceed the configured size cap.
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  //! A table fails a ring or semigroup axiom. `witness` holds the first
  //! failing tuple of element indices.
  class AxiomError : public Error {
   public:
    AxiomError(std::string const& axiom, std::vector<std::size_t> witness);

    std::string const& axiom() const noexcept {
      return axiom_;
    }
    std::vector<std::size_t> const& witness() const noexcept {
      return witness_;
    }

   private:
    std::string              axiom_;
    std::vector<std::size_t> witness_;
  };

  //! A table file that cannot be read as a ring.
  class FormatError : public Error {
   public:
    using Error::Error;
  };

  //! A ring expression that does not match the grammar.
  class ParseError : public Error {
   public:
    ParseError(std::size_t offset, std::vector<std::string> expected,
               std::string const& detail = "");

    std::size_t offset() const noexcept {
      return offset_;
    }
    std::vector<std::string> const& expected() const noexcept {
      return expected_;
    }

   private:
    std::size_t              offset_;
    std::vector<std::string> expected_;
  };

  //! An operation was called outside its stated hypothesis.
  class HypothesisError : public Error {
   public:
    using Error::Error;
  };

  //! A machine-checked statement turned out false on a concrete instance.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace zdg

#endif  // ZDGRAPH_ERROR_HPP_
