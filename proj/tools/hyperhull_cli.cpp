// hyperhull: command-line front end.
//
//   vertices --n N [--general a,b,c,x0,y0 --branch-sample px,py]
//                  [--lattice w1x,w1y,w2x,w2y --anchor px,py] [--format csv|jsonl]
//   count    --n N
//   scan     --from A --to B --out FILE [--chunks K]
//   factor   --n N [--chunks K]
//   next     --n N --from-x X
//
// Exit status: 0 on success, 1 on a domain error, 2 on a usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperhull/hyperhull.hpp"

namespace {

using namespace hyperhull;
using Q = Rat<BigInt>;
using P = Point2<BigInt>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Q> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<Q> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(Q::parse(item));
    } catch (const Error& e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected) {
    throw UsageError(std::string(flag) + " expects " + std::to_string(expected) + " comma-separated values");
  }
  return out;
}

Q parse_rat(const std::string& text, const char* flag) { return parse_list(text, 1, flag)[0]; }

BigInt parse_integer(const std::string& text, const char* flag) {
  const Q q = parse_rat(text, flag);
  if (!q.is_integer()) throw UsageError(std::string(flag) + " must be an integer");
  return q.num();
}

void print_points(const std::vector<P>& pts, const std::string& format) {
  for (const P& p : pts) {
    if (format == "jsonl") {
      std::cout << nlohmann::json{{"x", p.x.str()}, {"y", p.y.str()}}.dump() << '\n';
    } else {
      std::cout << p.x.str() << ',' << p.y.str() << '\n';
    }
  }
}

template <ExactInteger I>
std::vector<P> to_big(const HullPath<I>& path) {
  std::vector<P> out;
  out.reserve(path.size());
  for (const auto& p : path) out.push_back(point_cast<BigInt>(p));
  return out;
}

struct VerticesArgs {
  std::string n, general, sample, lattice, anchor, format = "csv";
};

int run_vertices(const VerticesArgs& a) {
  if (a.format != "csv" && a.format != "jsonl") throw UsageError("--format must be csv or jsonl");
  const Q n = parse_rat(a.n, "--n");
  std::vector<P> pts;
  if (!a.general.empty()) {
    if (!a.lattice.empty() || !a.anchor.empty()) throw UsageError("--general cannot be combined with --lattice or --anchor");
    if (a.sample.empty()) throw UsageError("--general needs --branch-sample");
    const auto g = parse_list(a.general, 5, "--general");
    const auto s = parse_list(a.sample, 2, "--branch-sample");
    for (int i = 0; i < 3; ++i) {
      if (!g[i].is_integer()) throw UsageError("--general coefficients a,b,c must be integers");
    }
    pts = with_fallback([&]<class I>(std::type_identity<I>) {
      const auto h = GeneralHyperbola<I>::make(int_cast<I>(g[0].num()), int_cast<I>(g[1].num()), int_cast<I>(g[2].num()),
                                               rat_cast<I>(g[3]), rat_cast<I>(g[4]), rat_cast<I>(n));
      return to_big(enumerate_general(h, BranchSelector<I>{Point2<I>{rat_cast<I>(s[0]), rat_cast<I>(s[1])}}));
    });
  } else {
    if (!a.sample.empty()) throw UsageError("--branch-sample needs --general");
    AffineLattice<BigInt> lat = integer_lattice<BigInt>();
    if (!a.lattice.empty()) {
      const auto w = parse_list(a.lattice, 4, "--lattice");
      lat.basis = standard_basis(Basis2<BigInt>{{w[0], w[1]}, {w[2], w[3]}});
    }
    if (!a.anchor.empty()) {
      const auto p = parse_list(a.anchor, 2, "--anchor");
      lat.anchor = {p[0], p[1]};
    }
    pts = with_fallback([&]<class I>(std::type_identity<I>) {
      return to_big(enumerate_hull(rat_cast<I>(n), lattice_cast<I>(lat)));
    });
  }
  print_points(pts, a.format);
  return 0;
}

int run_count(const std::string& n_text) {
  std::cout << count_vertices(parse_integer(n_text, "--n")) << '\n';
  return 0;
}

int run_scan(const std::string& from, const std::string& to, const std::string& path, unsigned chunks) {
  const BigInt lo = parse_integer(from, "--from");
  const BigInt hi = parse_integer(to, "--to");
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw DomainError("cannot open " + path + " for writing");
    os = &file;
  }
  write_csv_header(*os);
  try {
    scan(lo, hi, [&](const BoundReport& r) { write_csv_row(*os, r); }, chunks);
  } catch (...) {
    os->flush();
    throw;
  }
  os->flush();
  if (!*os) throw DomainError("write to " + path + " failed");
  return 0;
}

int run_factor(const std::string& n_text, unsigned chunks) {
  const BigInt n = parse_integer(n_text, "--n");
  const auto d = find_factor(n, chunks);
  if (d) {
    std::cout << "divisor " << d->str() << '\n';
  } else {
    std::cout << "prime (no divisor d with 1 < d <= " << floor_sqrt(n).str() << ")\n";
  }
  return 0;
}

int run_next(const std::string& n_text, const std::string& x_text) {
  const Q n = parse_rat(n_text, "--n");
  const Q x = parse_rat(x_text, "--from-x");
  const auto r = with_fallback([&]<class I>(std::type_identity<I>) -> std::optional<P> {
    const auto v = next_vertex_from_x(rat_cast<I>(n), integer_lattice<I>(), rat_cast<I>(x));
    if (!v) return std::nullopt;
    return point_cast<BigInt>(*v);
  });
  if (r) {
    std::cout << r->x.str() << ',' << r->y.str() << '\n';
  } else {
    std::cout << "inf\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex hulls of lattice points above hyperbolas"};
  app.require_subcommand(1);

  VerticesArgs va;
  auto* vertices = app.add_subcommand("vertices", "List hull vertices, one per line");
  vertices->add_option("--n", va.n, "Level n (rational)")->required();
  vertices->add_option("--general", va.general, "a,b,c,x0,y0 of a(x-x0)^2+b(x-x0)(y-y0)+c(y-y0)^2 = n");
  vertices->add_option("--branch-sample", va.sample, "px,py strictly inside the wanted component");
  vertices->add_option("--lattice", va.lattice, "w1x,w1y,w2x,w2y basis of the lattice");
  vertices->add_option("--anchor", va.anchor, "px,py translate of the lattice");
  vertices->add_option("--format", va.format, "csv or jsonl");

  std::string count_n;
  auto* count = app.add_subcommand("count", "Number of hull vertices over Z^2");
  count->add_option("--n", count_n, "Positive integer n")->required();

  std::string scan_from, scan_to, scan_out;
  unsigned scan_chunks = 1;
  auto* scan_cmd = app.add_subcommand("scan", "Vertex counts and bound checks as CSV");
  scan_cmd->add_option("--from", scan_from)->required();
  scan_cmd->add_option("--to", scan_to)->required();
  scan_cmd->add_option("--out", scan_out, "Output file, or - for standard output")->required();
  scan_cmd->add_option("--chunks", scan_chunks, "Worker threads")->check(CLI::PositiveNumber);

  std::string factor_n;
  unsigned factor_chunks = 1;
  auto* factor = app.add_subcommand("factor", "Smallest nontrivial divisor");
  factor->add_option("--n", factor_n)->required();
  factor->add_option("--chunks", factor_chunks, "Worker threads")->check(CLI::PositiveNumber);

  std::string next_n, next_x;
  auto* next = app.add_subcommand("next", "First vertex with x >= from-x over Z^2");
  next->add_option("--n", next_n)->required();
  next->add_option("--from-x", next_x)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*vertices) return run_vertices(va);
    if (*count) return run_count(count_n);
    if (*scan_cmd) return run_scan(scan_from, scan_to, scan_out, scan_chunks);
    if (*factor) return run_factor(factor_n, factor_chunks);
    if (*next) return run_next(next_n, next_x);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BoundViolation& e) {
    std::cerr << "bound violation at n = " << e.n << ": " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
