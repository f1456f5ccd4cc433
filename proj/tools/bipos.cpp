// bipos: command-line front end.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bipos/classical.hpp"
#include "bipos/exceptional.hpp"
#include "bipos/verify.hpp"
#include "json.hpp"

using namespace bipos;
namespace cl = bipos::classical;
using ojson = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string group;
  std::string format = "text";
  double tolerance = 1e-9;
  std::string variant = "standard";
  int delta = 0;
  int d = -1;
  int max_d = cl::kMaxD;
  std::string family;
  bool check_props = false;
  std::string zof;
  std::string vector;
  std::string out;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

ojson triples_json(const Cyclo& c) {
  ojson a = ojson::array();
  for (auto [k, n, d] : c.triples()) a.push_back({k, n, d});
  return a;
}

// Integers bare, other rationals n/d, otherwise the (exponent, n, d) list.
std::string cell(const Cyclo& c) { return c.is_rational() ? c.to_rational().str() : triples_json(c).dump(); }

ojson cyclo_json(const Cyclo& c) {
  if (!c.is_rational()) return triples_json(c);
  Rational r = c.to_rational();
  if (r.den() == 1) return r.num();
  return r.str();
}

// ---- mspace ------------------------------------------------------------------

int cmd_mspace(const RunConfig& cfg, std::ostream& o) {
  MSpacePtr s = space_for(cfg.group);
  if (cfg.format == "json") {
    ojson a = ojson::array();
    for (int m = 0; m < s->size(); ++m) a.push_back({{"index", m}, {"x", s->class_label(m)}, {"rho", s->char_label(m)}});
    o << a.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    o << "index,x,rho\n";
    for (int m = 0; m < s->size(); ++m)
      o << m << "," << csv_cell(s->class_label(m)) << "," << csv_cell(s->char_label(m)) << "\n";
  } else {
    o << "M(" << cfg.group << "): " << s->size() << " pairs\n";
    for (int m = 0; m < s->size(); ++m) o << "  " << s->label(m) << "\n";
  }
  return 0;
}

// ---- basis -------------------------------------------------------------------

int cmd_basis(const RunConfig& cfg, std::ostream& o) {
  GroupPtr g = build_standard(cfg.group);
  auto elems = basis_beta(g, cfg.variant == "primed" ? Variant::Primed : Variant::Standard);
  std::vector<MVector> vecs;
  for (const auto& e : elems) vecs.push_back(e.vector);
  const MSpace& s = *vecs.front().space();

  // Rows follow the triangular order when there is one.
  std::vector<std::pair<std::string, int>> rows;
  auto io = check_iota(vecs);
  auto tri = io.check.pass ? check_triangular(vecs, io.iota) : TriangularResult{};
  if (tri.check.pass) {
    for (int m : tri.order) rows.push_back({s.label(m), io.iota[m]});
  } else {
    for (int b = 0; b < static_cast<int>(vecs.size()); ++b) rows.push_back({"", b});
  }

  auto fields = [](const std::string& prov) {
    std::istringstream in(prov);
    std::vector<std::string> f;
    for (std::string w; in >> w;) f.push_back(w);
    return f.size() == 3 ? f : std::vector<std::string>{};
  };

  if (cfg.format == "json") {
    ojson a = ojson::array();
    for (const auto& [label, b] : rows) {
      ojson r;
      r["pair"] = label;
      r["provenance"] = elems[b].provenance;
      if (auto f = fields(elems[b].provenance); !f.empty()) {
        r["lower"] = f[0];
        r["upper"] = f[1];
        r["xi"] = f[2];
      }
      r["vector"] = ojson::array();
      for (const auto& [m, c] : vecs[b].terms()) r["vector"].push_back({{"pair", s.label(m)}, {"coeff", cyclo_json(c)}});
      a.push_back(r);
    }
    o << a.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    o << "pair,lower,upper,xi,vector\n";
    for (const auto& [label, b] : rows) {
      auto f = fields(elems[b].provenance);
      if (f.empty()) f = {elems[b].provenance, "", ""};
      o << csv_cell(label) << "," << csv_cell(f[0]) << "," << csv_cell(f[1]) << "," << csv_cell(f[2]) << ","
        << csv_cell(vecs[b].str()) << "\n";
    }
  } else {
    o << "beta(" << cfg.group << ")" << (cfg.variant == "primed" ? " primed" : "") << ": " << rows.size()
      << " vectors\n";
    for (const auto& [label, b] : rows)
      o << "  " << (label.empty() ? "?" : label) << " = s[" << elems[b].provenance << "] = " << vecs[b].str() << "\n";
  }
  return 0;
}

// ---- fourier -----------------------------------------------------------------

int cmd_fourier(const RunConfig& cfg, std::ostream& o) {
  MSpacePtr s = space_for(cfg.group);
  if (!cfg.vector.empty()) {
    MVector v = MVector::parse(s, cfg.vector);
    MVector w = fourier(v);
    if (cfg.format == "json")
      o << w.to_json() << "\n";
    else
      o << w.str() << "\n";
    return 0;
  }
  FourierMatrix A = FourierMatrix::build(s);
  const int n = A.size();
  if (cfg.format == "json") {
    ojson j;
    j["labels"] = ojson::array();
    for (int m = 0; m < n; ++m) j["labels"].push_back(s->label(m));
    j["matrix"] = ojson::array();
    for (int r = 0; r < n; ++r) {
      ojson row = ojson::array();
      for (int c = 0; c < n; ++c) row.push_back(cyclo_json(A.entry(r, c)));
      j["matrix"].push_back(row);
    }
    o << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    for (int m = 0; m < n; ++m) o << "," << csv_cell(s->label(m));
    o << "\n";
    for (int r = 0; r < n; ++r) {
      o << csv_cell(s->label(r));
      for (int c = 0; c < n; ++c) o << "," << csv_cell(cell(A.entry(r, c)));
      o << "\n";
    }
  } else {
    o << "A on M(" << cfg.group << "), " << n << "x" << n << ", nonzero entries:\n";
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (Cyclo e = A.entry(r, c); !e.is_zero()) o << "  " << s->label(r) << " " << s->label(c) << " " << e.str() << "\n";
  }
  return 0;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& o) {
  auto rep = verify_group(cfg.group, cfg.variant == "primed" ? Variant::Primed : Variant::Standard, cfg.tolerance);
  if (cfg.format == "json") {
    o << rep.to_json() << "\n";
  } else if (cfg.format == "csv") {
    o << "check,pass,witness\n";
    for (const auto& c : rep.checks) o << csv_cell(c.name) << "," << (c.pass ? 1 : 0) << "," << csv_cell(c.witness) << "\n";
    for (const auto& f : rep.fixed_points) o << csv_cell("fixed " + f.pair) << "," << (f.fixed ? 1 : 0) << ",\n";
  } else {
    o << rep.to_text();
  }
  return rep.pass() ? 0 : 1;
}

// ---- classical ---------------------------------------------------------------

int cmd_classical(const RunConfig& cfg, std::ostream& o) {
  if (cfg.d < 0 || cfg.d % 2) throw std::invalid_argument("--D must be a non-negative even integer");
  if (!cfg.zof.empty()) {
    // z(B) needs no enumeration, so the cap does not apply.
    auto z = cl::z_of(cl::parse_intervals(cfg.zof), cfg.d);
    cl::IntervalSet seq(z.seq.begin(), z.seq.end());
    if (cfg.format == "json") {
      ojson j{{"B", cfg.zof}, {"D", cfg.d}, {"z", cl::to_string(seq)}, {"z1", cl::to_string(z.z1)},
              {"z2", cl::to_string(z.z2)}, {"c", z.c}};
      o << j.dump(2) << "\n";
    } else {
      o << cl::to_string(seq) << "\n";
    }
    return 0;
  }
  if (cfg.d > cfg.max_d || cfg.d > cl::kMaxD)
    throw std::invalid_argument("D = " + std::to_string(cfg.d) + " exceeds the enumeration cap " +
                                std::to_string(std::min(cfg.max_d, cl::kMaxD)));

  std::vector<std::string> items;
  const std::string& f = cfg.family;
  auto sub = [&](const cl::Subspace& s) { return s.str(cfg.d); };
  if (f == "SD" || f == "SSD" || f == "SSprim") {
    auto kind = f == "SD" ? cl::Family::S : f == "SSD" ? cl::Family::SS : cl::Family::SSPrim;
    for (const auto& b : cl::enumerate_family(kind, cfg.d)) items.push_back(cl::to_string(b));
  } else if (f == "F") {
    for (const auto& s : cl::family_f(cfg.d)) items.push_back(sub(s));
  } else if (f == "FF") {
    for (const auto& s : cl::family_ff(cfg.d)) items.push_back(sub(s));
  } else if (f == "C") {
    for (const auto& s : cl::family_c(cfg.d, cfg.delta)) items.push_back(sub(s));
  } else if (f == "Ctilde") {
    for (const auto& p : cl::family_ctilde(cfg.d, cfg.delta)) items.push_back(sub(p.l1) + " in " + sub(p.l2));
  } else if (f == "Ftilde") {
    for (const auto& t : cl::family_ftilde(cfg.d, cfg.delta))
      items.push_back(sub(t.pair.l1) + " in " + sub(t.pair.l2) + " k=" + std::to_string(t.k) + " -> " +
                      sub(cl::theta_217(t, cfg.delta, cfg.d)));
  } else if (!f.empty()) {
    throw std::invalid_argument("unknown family " + f);
  }

  std::vector<Check> checks;
  if (cfg.check_props) checks = check_classical_properties(cfg.d);
  bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });

  if (cfg.format == "json") {
    ojson j{{"D", cfg.d}, {"delta", cfg.delta}};
    if (!f.empty()) {
      j["family"] = f;
      j["count"] = items.size();
      j["members"] = items;
    }
    if (cfg.check_props) {
      j["checks"] = ojson::array();
      for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    }
    o << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    if (!f.empty()) {
      o << "index,member\n";
      for (std::size_t i = 0; i < items.size(); ++i) o << i << "," << csv_cell(items[i]) << "\n";
    }
    if (cfg.check_props) {
      o << "check,pass,witness\n";
      for (const auto& c : checks) o << csv_cell(c.name) << "," << (c.pass ? 1 : 0) << "," << csv_cell(c.witness) << "\n";
    }
  } else {
    if (!f.empty()) {
      o << f << " at D=" << cfg.d << (f == "C" || f == "Ctilde" || f == "Ftilde" ? " delta=" + std::to_string(cfg.delta) : "")
        << ": " << items.size() << " members\n";
      for (const auto& it : items) o << "  " << it << "\n";
    }
    for (const auto& c : checks)
      o << (c.pass ? "ok   " : "FAIL ") << c.name << (c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
  }
  return pass ? 0 : 1;
}

// ---- goldens -----------------------------------------------------------------

int cmd_goldens(const RunConfig& cfg, std::ostream& o) {
  if (cfg.format == "text" && cfg.group.empty()) {
    o << golden_text();
    return 0;
  }
  std::vector<GoldenRow> rows;
  if (cfg.group.empty()) {
    rows = golden_rows();
  } else {
    if (cfg.group.size() != 2 || cfg.group[0] != 'S' || cfg.group[1] < '1' || cfg.group[1] > '5')
      throw std::invalid_argument("goldens exist for S1..S5 only");
    rows = golden_table(cfg.group[1] - '0');
  }
  if (cfg.format == "json") {
    ojson a = ojson::array();
    for (const auto& r : rows) {
      ojson j{{"group", "S" + std::to_string(r.n)}, {"pair", r.lhs}, {"lower", r.lower}, {"upper", r.upper}, {"xi", r.xi}};
      j["expansion"] = r.rhs ? ojson(*r.rhs) : ojson(nullptr);
      a.push_back(j);
    }
    o << a.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    o << "group,pair,lower,upper,xi,expansion\n";
    for (const auto& r : rows)
      o << "S" << r.n << "," << csv_cell(r.lhs) << "," << r.lower << "," << r.upper << "," << csv_cell(r.xi) << ","
        << csv_cell(r.rhs.value_or("")) << "\n";
  } else {
    for (const auto& r : rows)
      o << "S" << r.n << " | " << r.lhs << " | " << r.lower << " " << r.upper << " " << r.xi << " | "
        << r.rhs.value_or("-") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipositive bases of C[M(G)]: pair spaces, Fourier transform, bases and their checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto common = [&](CLI::App* c) {
    c->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    c->add_option("--out", cfg.out, "Write output to this file");
  };
  auto group_opt = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--group", cfg.group, "Group descriptor: S1..S5, V<n>, joined by x");
    if (required) opt->required();
  };
  auto variant_opt = [&](CLI::App* c) {
    c->add_option("--variant", cfg.variant, "Basis variant")->check(CLI::IsMember({"standard", "primed"}));
  };

  auto* mspace = app.add_subcommand("mspace", "List M(G)");
  group_opt(mspace, true);
  common(mspace);

  auto* basis = app.add_subcommand("basis", "Emit the basis with provenance, in triangular order");
  group_opt(basis, true);
  variant_opt(basis);
  common(basis);

  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier matrix of M(G), or its action on one vector");
  group_opt(fourier_cmd, true);
  fourier_cmd->add_option("--vector", cfg.vector, "Apply A to this vector, e.g. \"(g2,e)+(1,1)\"");
  common(fourier_cmd);

  auto* verify = app.add_subcommand("verify", "Check bipositivity, unique iota and unitriangularity");
  group_opt(verify, true);
  variant_opt(verify);
  verify->add_option("--tolerance", cfg.tolerance, "Tolerance for signs of irrational real coefficients")
      ->check(CLI::PositiveNumber);
  common(verify);

  auto* classical = app.add_subcommand("classical", "Interval families, subspace families and z(B)");
  classical->add_option("--D", cfg.d, "Size of the interval [1,D] (even)")->required();
  classical->add_option("--family", cfg.family, "Family to list")
      ->check(CLI::IsMember({"SD", "SSD", "SSprim", "F", "FF", "C", "Ctilde", "Ftilde"}));
  classical->add_option("--delta", cfg.delta, "Parity delta")->check(CLI::IsMember({0, 1}));
  classical->add_flag("--check-props", cfg.check_props, "Run the bijection and invariant sweeps at this D");
  classical->add_option("--zof", cfg.zof, "Print z(B) for an interval set such as \"{[3,5],[4,4]}\"");
  classical->add_option("--max-D", cfg.max_d, "Enumeration cap")->check(CLI::Range(0, cl::kMaxD));
  common(classical);

  auto* goldens = app.add_subcommand("goldens", "Dump the embedded golden tables");
  group_opt(goldens, false);
  common(goldens);

  CLI11_PARSE(app, argc, argv);

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.out << "\n";
      return 2;
    }
  }
  std::ostream& o = cfg.out.empty() ? std::cout : file;
  try {
    if (*mspace) return cmd_mspace(cfg, o);
    if (*basis) return cmd_basis(cfg, o);
    if (*fourier_cmd) return cmd_fourier(cfg, o);
    if (*verify) return cmd_verify(cfg, o);
    if (*classical) return cmd_classical(cfg, o);
    if (*goldens) return cmd_goldens(cfg, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
