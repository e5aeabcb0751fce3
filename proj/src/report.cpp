#include "zdgraph/report.hpp"

namespace zdg {

  Json report_json(AnalysisReport const& rep) {
    Json j                   = Json::object();
    j["expr"]                = rep.expr;
    j["ring_order"]          = rep.ring_order;
    j["left_ideal_count"]    = rep.left_ideal_count;
    j["right_ideal_count"]   = rep.right_ideal_count;
    j["ipo_size"]            = rep.ipo_size;
    j["vertex_count"]        = rep.vertex_count;
    j["directed_connected"]  = rep.metrics.directed_connected;
    j["directed_diameter"]   = distance_json(rep.metrics.directed_diameter);
    j["undirected_diameter"] = distance_json(rep.metrics.undirected_diameter);
    j["girth"]               = distance_json(rep.metrics.girth);
    j["complete"]            = rep.metrics.complete;
    j["tournament"]          = rep.metrics.tournament;
    Json checks              = Json::array();
    for (auto const& c : rep.checks) {
      Json item       = Json::object();
      item["name"]    = c.name;
      item["status"]  = to_string(c.status);
      item["witness"] = c.witness;
      checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
    return j;
  }

  std::string write_report_json(AnalysisReport const& rep) {
    return report_json(rep).dump(2) + "\n";
  }

}  // namespace zdg
