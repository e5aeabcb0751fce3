#include "zdgraph/error.hpp"

namespace zdg {

  namespace {
    std::string tuple_string(std::vector<std::size_t> const& w) {
      std::string out = "(";
      for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(w[i]);
      }
      return out + ")";
    }

    std::string join(std::vector<std::string> const& xs) {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ", ") + xs[i];
      }
      return out;
    }
  }  // namespace

  AxiomError::AxiomError(std::string const& axiom,
                         std::vector<std::size_t> witness)
      : Error(witness.empty() ? axiom : axiom + " at " + tuple_string(witness)),
        axiom_(axiom),
        witness_(std::move(witness)) {}

  ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                         std::string const& detail)
      : Error("syntax error at offset " + std::to_string(offset)
              + (detail.empty() ? "" : ": " + detail)
              + (expected.empty() ? "" : "; expected one of: " + join(expected))),
        offset_(offset),
        expected_(std::move(expected)) {}

}  // namespace zdg
