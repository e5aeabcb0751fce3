#ifndef ZDGRAPH_REPORT_HPP_
#define ZDGRAPH_REPORT_HPP_

#include <string>

#include "zdgraph/theorems.hpp"

namespace zdg {

  //! Report as an ordered JSON object (fields in declaration order).
  Json report_json(AnalysisReport const& rep);

  //! Pretty-printed report followed by a newline. Identical reports give
  //! identical bytes.
  std::string write_report_json(AnalysisReport const& rep);

}  // namespace zdg

#endif  // ZDGRAPH_REPORT_HPP_
