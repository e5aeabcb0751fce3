#include "zdgraph/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "zdgraph/expr.hpp"
#include "zdgraph/report.hpp"
#include "zdgraph/theorems.hpp"

namespace zdg::cli {

  namespace {

    std::size_t resolve_cap(std::optional<std::size_t> flag) {
      if (flag) {
        return *flag;
      }
      if (char const* env = std::getenv("ZDGRAPH_CAP"); env != nullptr && *env != '\0') {
        char*              end = nullptr;
        unsigned long long v   = std::strtoull(env, &end, 10);
        if (*end != '\0' || v == 0) {
          throw InvalidArgument(std::string("ZDGRAPH_CAP is not a positive integer: ") + env);
        }
        return static_cast<std::size_t>(v);
      }
      return default_size_cap;
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream f(path, std::ios::binary);
      if (!f) {
        throw InvalidArgument("cannot open " + path + " for writing");
      }
      f << text;
      if (!f) {
        throw InvalidArgument("failed writing " + path);
      }
    }

    struct Tally {
      std::size_t passed = 0, failed = 0, na = 0;

      void add(std::vector<CheckResult> const& checks) {
        for (auto const& c : checks) {
          switch (c.status) {
            case CheckStatus::pass:
              ++passed;
              break;
            case CheckStatus::fail:
              ++failed;
              break;
            default:
              ++na;
          }
        }
      }
    };

    class Summary {
     public:
      explicit Summary(std::ostream& out) : out_(out) {
        row("instance", "passed", "failed", "n/a");
      }

      void add(std::string const& name, std::vector<CheckResult> const& checks) {
        Tally t;
        t.add(checks);
        total_.add(checks);
        ++instances_;
        row(name, std::to_string(t.passed), std::to_string(t.failed),
            std::to_string(t.na));
        for (auto const& c : checks) {
          if (c.failed()) {
            out_ << "  FAIL " << c.name << " " << c.witness.dump() << "\n";
          }
        }
      }

      int finish() {
        out_ << instances_ << " instances, " << total_.passed << " passed, "
             << total_.failed << " failed, " << total_.na << " not applicable\n";
        return total_.failed == 0 ? exit_ok : exit_check_failed;
      }

     private:
      void row(std::string const& a, std::string const& b, std::string const& c,
               std::string const& d) {
        out_ << std::left << std::setw(24) << a << std::right << std::setw(8) << b
             << std::setw(8) << c << std::setw(8) << d << "\n";
      }

      std::ostream& out_;
      Tally         total_;
      std::size_t   instances_ = 0;
    };

    int analyze(std::string const& text, std::optional<std::string> const& json,
                std::optional<std::string> const& dot, std::string const& dot_mode,
                std::size_t cap, std::ostream& out) {
      RingExpr const       e   = parse_ring_expr(text);
      FiniteRing const     r   = build_ring(e, cap);
      AnalysisReport const rep = run_all(r, unparse(e));
      std::string const    doc = write_report_json(rep);
      if (!json || *json == "-") {
        out << doc;
      } else {
        write_file(*json, doc);
      }
      if (dot) {
        DotMode mode = dot_mode == "undirected" ? DotMode::undirected : DotMode::directed;
        if (*dot == "-") {
          out << export_dot(rep.graph, mode);
        } else {
          write_file(*dot, export_dot(rep.graph, mode));
        }
      }
      return rep.any_failed() ? exit_check_failed : exit_ok;
    }

    int verify_zn(std::size_t max, std::ostream& out) {
      if (max < 2) {
        throw InvalidArgument("--max must be at least 2");
      }
      Summary sum(out);
      for (std::size_t n = 2; n <= max; ++n) {
        sum.add("Z" + std::to_string(n), run_all(make_cyclic_ring(n)).checks);
      }
      return sum.finish();
    }

    int verify_semigroups(std::size_t order, std::ostream& out) {
      auto const all = enumerate_semigroups_with_zero(order);
      Summary    sum(out);
      for (std::size_t i = 0; i < all.size(); ++i) {
        sum.add("S" + std::to_string(order) + "#" + std::to_string(i),
                run_semigroup_checks(all[i]));
      }
      return sum.finish();
    }

    int verify_list(std::string const& path, std::size_t cap, std::ostream& out) {
      std::ifstream in(path);
      if (!in) {
        throw InvalidArgument("cannot open " + path);
      }
      std::vector<RingExpr> exprs;
      std::string           line;
      while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
          continue;
        }
        exprs.push_back(parse_ring_expr(line));
      }
      Summary sum(out);
      for (auto const& e : exprs) {
        sum.add(unparse(e), run_all(build_ring(e, cap), unparse(e)).checks);
      }
      return sum.finish();
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Zero-divisor graphs of ideal-product semigroups of finite rings",
                 "zdgraph"};
    app.require_subcommand(1);

    std::string                expr_text;
    std::optional<std::string> json_path, dot_path;
    std::string                dot_mode = "directed";
    std::optional<std::size_t> cap;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyse one ring and report every check");
    analyze_cmd->add_option("EXPR", expr_text, "Ring expression, e.g. \"M2(Z2 x Z3)\"")->required();
    analyze_cmd->add_option("--json", json_path, "Report path, or - for stdout");
    analyze_cmd->add_option("--dot", dot_path, "Write the graph in DOT format (- for stdout)");
    analyze_cmd->add_option("--dot-mode", dot_mode, "directed or undirected")
        ->check(CLI::IsMember({"directed", "undirected"}));
    analyze_cmd->add_option("--cap", cap, "Largest ring order to build")
        ->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Run the checks over a family");
    verify_cmd->require_subcommand(1);
    std::size_t zn_max = 0, sg_order = 0;
    std::string list_file;
    auto*       zn = verify_cmd->add_subcommand("zn", "Z_n for 2 <= n <= max");
    zn->add_option("--max", zn_max, "Largest n")->required();
    auto* sg = verify_cmd->add_subcommand("semigroups", "All semigroups with zero of one order");
    sg->add_option("--order", sg_order, "Order 2..4")->required()->check(CLI::Range(2, 4));
    auto* list = verify_cmd->add_subcommand("list", "Expressions listed in a file");
    list->add_option("--file", list_file, "One expression per line")->required();
    list->add_option("--cap", cap, "Largest ring order to build")->check(CLI::PositiveNumber);

    std::string parse_text;
    auto*       parse_cmd = app.add_subcommand("parse", "Print the expression tree");
    parse_cmd->add_option("EXPR", parse_text, "Ring expression")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_error;
    }

    try {
      if (*analyze_cmd) {
        return analyze(expr_text, json_path, dot_path, dot_mode, resolve_cap(cap), out);
      }
      if (*parse_cmd) {
        RingExpr const e = parse_ring_expr(parse_text);
        out << tree_string(e) << "\n";
        return exit_ok;
      }
      if (*zn) {
        return verify_zn(zn_max, out);
      }
      if (*sg) {
        return verify_semigroups(sg_order, out);
      }
      return verify_list(list_file, resolve_cap(cap), out);
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_error;
    } catch (std::bad_alloc const&) {
      err << "error: out of memory\n";
      return exit_error;
    }
  }

}  // namespace zdg::cli
