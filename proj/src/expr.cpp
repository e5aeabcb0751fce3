#include "zdgraph/expr.hpp"

#include <cctype>

#include "zdgraph/error.hpp"

namespace zdg {

  RingExpr RingExpr::cyclic(std::size_t n) {
    RingExpr e;
    e.kind = Kind::cyclic;
    e.n    = n;
    return e;
  }

  RingExpr RingExpr::product(std::vector<RingExpr> factors) {
    if (factors.size() < 2) {
      throw InvalidArgument("a product needs at least two factors");
    }
    RingExpr e;
    e.kind     = Kind::product;
    e.children = std::move(factors);
    return e;
  }

  RingExpr RingExpr::matrix(std::size_t k, RingExpr base) {
    RingExpr e;
    e.kind = Kind::matrix;
    e.n    = k;
    e.children.push_back(std::move(base));
    return e;
  }

  RingExpr RingExpr::table(std::string path) {
    RingExpr e;
    e.kind = Kind::table;
    e.path = std::move(path);
    return e;
  }

  namespace {

    constexpr std::size_t max_uint = 1'000'000'000;

    class Parser {
     public:
      explicit Parser(std::string_view text) : s_(text) {}

      RingExpr parse() {
        RingExpr e = expr();
        skip();
        if (pos_ != s_.size()) {
          fail({"'x'", "end of input"}, "unexpected character");
        }
        return e;
      }

     private:
      [[noreturn]] void fail(std::vector<std::string> expected,
                             std::string const& detail) const {
        throw ParseError(pos_, std::move(expected), detail);
      }

      void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }

      bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          fail({std::string("'") + c + "'"}, "missing token");
        }
        ++pos_;
      }

      RingExpr expr() {
        std::vector<RingExpr> factors;
        factors.push_back(term());
        while (peek('x')) {
          ++pos_;
          factors.push_back(term());
        }
        return factors.size() == 1 ? std::move(factors.front())
                                   : RingExpr::product(std::move(factors));
      }

      std::size_t uint() {
        skip();
        std::size_t const start = pos_;
        std::size_t       v     = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
          if (v > max_uint) {
            pos_ = start;
            fail({"UINT"}, "number too large");
          }
          ++pos_;
        }
        if (pos_ == start) {
          fail({"UINT"}, "missing number");
        }
        if (v == 0) {
          pos_ = start;
          fail({"UINT >= 1"}, "zero is not allowed");
        }
        return v;
      }

      RingExpr term() {
        skip();
        if (pos_ < s_.size()) {
          switch (s_[pos_]) {
            case 'Z':
              ++pos_;
              return RingExpr::cyclic(uint());
            case 'M': {
              ++pos_;
              std::size_t k = uint();
              expect('(');
              RingExpr base = expr();
              expect(')');
              return RingExpr::matrix(k, std::move(base));
            }
            case 'T': {
              if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '(') {
                pos_ += 2;
                std::size_t const close = s_.find(')', pos_);
                if (close == std::string_view::npos) {
                  pos_ = s_.size();
                  fail({"')'"}, "unterminated table path");
                }
                std::string_view path = s_.substr(pos_, close - pos_);
                while (!path.empty() && std::isspace(static_cast<unsigned char>(path.front()))) {
                  path.remove_prefix(1);
                }
                while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) {
                  path.remove_suffix(1);
                }
                if (path.empty()) {
                  fail({"path"}, "empty table path");
                }
                pos_ = close + 1;
                return RingExpr::table(std::string(path));
              }
              break;
            }
            case '(': {
              ++pos_;
              RingExpr inner = expr();
              expect(')');
              return inner;
            }
            default:
              break;
          }
        }
        fail({"'Z'", "'M'", "'T('", "'('"},
             pos_ < s_.size() ? "unexpected character" : "unexpected end of input");
      }

      std::string_view s_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  RingExpr parse_ring_expr(std::string_view text) {
    return Parser(text).parse();
  }

  std::string unparse(RingExpr const& e) {
    switch (e.kind) {
      case RingExpr::Kind::cyclic:
        return "Z" + std::to_string(e.n);
      case RingExpr::Kind::matrix:
        return "M" + std::to_string(e.n) + "(" + unparse(e.children.front()) + ")";
      case RingExpr::Kind::table:
        return "T(" + e.path + ")";
      case RingExpr::Kind::product:
        break;
    }
    std::string out;
    for (auto const& f : e.children) {
      if (!out.empty()) {
        out += " x ";
      }
      out += f.kind == RingExpr::Kind::product ? "(" + unparse(f) + ")" : unparse(f);
    }
    return out;
  }

  std::string tree_string(RingExpr const& e) {
    switch (e.kind) {
      case RingExpr::Kind::cyclic:
        return "Cyclic(" + std::to_string(e.n) + ")";
      case RingExpr::Kind::matrix:
        return "Matrix(" + std::to_string(e.n) + ", " + tree_string(e.children.front()) + ")";
      case RingExpr::Kind::table:
        return "TableFile(" + e.path + ")";
      case RingExpr::Kind::product:
        break;
    }
    std::string out = "Product[";
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      out += (i ? ", " : "") + tree_string(e.children[i]);
    }
    return out + "]";
  }

  FiniteRing build_ring(RingExpr const& e, std::size_t cap) {
    switch (e.kind) {
      case RingExpr::Kind::cyclic:
        if (e.n > cap) {
          throw CapacityError("Z" + std::to_string(e.n) + " exceeds the size cap of "
                              + std::to_string(cap));
        }
        return make_cyclic_ring(e.n);
      case RingExpr::Kind::matrix:
        return make_matrix_ring(build_ring(e.children.front(), cap), e.n, cap);
      case RingExpr::Kind::table: {
        FiniteRing r = load_table_ring(std::filesystem::path(e.path));
        if (r.order() > cap) {
          throw CapacityError("table ring exceeds the size cap of " + std::to_string(cap));
        }
        return r;
      }
      case RingExpr::Kind::product:
        break;
    }
    FiniteRing acc = build_ring(e.children.front(), cap);
    for (std::size_t i = 1; i < e.children.size(); ++i) {
      acc = make_product_ring(acc, build_ring(e.children[i], cap), cap);
    }
    return acc;
  }

}  // namespace zdg
