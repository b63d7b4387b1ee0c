#include "chainex/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chainex/certificates.hpp"
#include "chainex/lengths.hpp"
#include "chainex/oriented_polytope.hpp"
#include "chainex/reference_polytopes.hpp"

namespace chainex::cli {

namespace {

using nlohmann::ordered_json;

struct Caps {
  int perm = perm::kDefaultCap;
  int assoc = assoc::kDefaultCap;
  int simplex = refpoly::kSimplexCap;
  int cube = refpoly::kCubeCap;
};

Caps read_caps(std::ostream& err) {
  Caps caps;
  auto read = [&](const char* name, int& slot) {
    if (const char* v = std::getenv(name)) {
      const int parsed = std::atoi(v);
      if (parsed >= 1) {
        slot = parsed;
        err << "warning: resource cap override " << name << "=" << parsed << "\n";
      }
    }
  };
  read("CHAINEX_PERM_CAP", caps.perm);
  read("CHAINEX_ASSOC_CAP", caps.assoc);
  read("CHAINEX_SIMPLEX_CAP", caps.simplex);
  read("CHAINEX_CUBE_CAP", caps.cube);
  return caps;
}

struct Output {
  std::string format = "text";
  std::string path;
  bool exact = false;
};

std::string ratio_text(const std::optional<Rational>& r, bool exact) {
  if (!r) return "undefined";
  return exact ? format_rational(*r) : format_decimal(*r, 6);
}

std::string ratio_csv(const std::optional<Rational>& r, bool exact) {
  if (!r) return "";
  return exact ? format_rational(*r) : format_decimal(*r, 6);
}

ordered_json ratio_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  ordered_json j;
  j["num"] = r->numerator();
  j["den"] = r->denominator();
  j["decimal"] = format_decimal(*r, 6);
  return j;
}

int deliver(const std::string& payload, const Output& opts, std::ostream& out,
            std::ostream& err) {
  if (opts.path.empty()) {
    out << payload;
    return kOk;
  }
  std::ofstream file(opts.path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file " << opts.path << "\n";
    return kUsageError;
  }
  file << payload;
  return kOk;
}

// ---------------------------------------------------------------- zebra

void render_zebra_text(const cert::ZebraCertificate& c, const Output& opts, std::ostream& os) {
  if (c.partial) {
    os << "partial zebra chain F^" << c.k << "(" << c.ground << ")";
  } else {
    os << "zebra chain Zeb^" << c.k << "(" << c.m << "," << c.n << ")";
  }
  os << " in the permutahedron on " << c.ground << " elements (dim " << c.chain.ambient_dim()
     << ")\n";
  const auto dims = c.chain.dims();
  for (int l = 1; l <= c.k; ++l) {
    os << "  l=" << l << ": " << c.chain.members[l - 1].label()
       << "  parts=" << c.chain.members[l - 1].block_count() << " dim=" << dims[l - 1] << "\n";
  }
  bool valid = true;
  os << "pairs:";
  for (size_t i = 0; i < c.pair_valid.size(); ++i) {
    valid = valid && c.pair_valid[i];
    os << " " << (i + 1) << "<=" << (i + 2) << ":" << (c.pair_valid[i] ? "ok" : "VIOLATED");
  }
  if (c.pair_valid.empty()) os << " (single member)";
  os << "\nvalid: " << (valid ? "yes" : "no") << "\n";
  os << "excess: " << c.excess << "\n";
  os << "E_" << c.k << "(" << c.ground << "): " << c.e_bound << "\n";
  os << "ratio: " << ratio_text(c.ratio, opts.exact) << "\n";
  os << "beta_finite: " << ratio_text(c.beta_finite, opts.exact) << "\n";
  if (!c.part_counts.empty()) {
    os << "part counts vs closed form ((l-1)n-1 for l>2, n for l<=2):\n";
    for (const auto& pc : c.part_counts) {
      os << "  l=" << pc.l << ": measured=" << pc.measured;
      if (pc.predicted)
        os << " predicted=" << *pc.predicted << " " << (pc.match() ? "MATCH" : "MISMATCH");
      else
        os << " predicted=n/a";
      os << "\n";
    }
  }
  if (c.predicted_excess) {
    os << "excess vs closed form (1-k)n^2+(1+k(k-1)/2)n+1: measured=" << c.excess
       << " predicted=" << *c.predicted_excess << " "
       << (c.excess == *c.predicted_excess ? "MATCH" : "MISMATCH") << "\n";
  } else if (c.partial) {
    os << "closed-form comparisons apply to full square grids only\n";
  }
}

ordered_json zebra_json(const cert::ZebraCertificate& c) {
  ordered_json j;
  j["command"] = "zebra";
  j["partial"] = c.partial;
  if (!c.partial) {
    j["m"] = c.m;
    j["n"] = c.n;
  } else {
    j["a"] = c.ground;
    j["grid_width"] = c.n;
  }
  j["k"] = c.k;
  j["ground"] = c.ground;
  j["ambient_dim"] = c.chain.ambient_dim();
  ordered_json members = ordered_json::array();
  ordered_json parts = ordered_json::array();
  for (const auto& m : c.chain.members) {
    members.push_back(ordered_json::parse(m.json()));
    parts.push_back(m.block_count());
  }
  j["members"] = members;
  j["member_parts"] = parts;
  j["member_dims"] = c.chain.dims();
  j["pair_valid"] = c.pair_valid;
  bool valid = true;
  for (bool b : c.pair_valid) valid = valid && b;
  j["valid"] = valid;
  j["excess"] = c.excess;
  j["facet_chain_excess"] = c.e_bound;
  j["ratio"] = ratio_json(c.ratio);
  j["beta_finite"] = ratio_json(c.beta_finite);
  if (!c.part_counts.empty()) {
    ordered_json cmp = ordered_json::array();
    for (const auto& pc : c.part_counts) {
      ordered_json e;
      e["l"] = pc.l;
      e["measured"] = pc.measured;
      e["predicted"] = pc.predicted ? ordered_json(*pc.predicted) : ordered_json(nullptr);
      e["match"] = pc.predicted ? ordered_json(pc.match()) : ordered_json(nullptr);
      cmp.push_back(e);
    }
    j["part_count_comparison"] = cmp;
  }
  if (c.predicted_excess) {
    ordered_json e;
    e["measured"] = c.excess;
    e["predicted"] = *c.predicted_excess;
    e["match"] = c.excess == *c.predicted_excess;
    j["excess_comparison"] = e;
  }
  return j;
}

void render_zebra_csv(const cert::ZebraCertificate& c, const Output& opts, std::ostream& os) {
  os << "l,member,parts,dim,excess,E_k,ratio\n";
  const auto dims = c.chain.dims();
  for (int l = 1; l <= c.k; ++l) {
    os << l << ",\"" << c.chain.members[l - 1].label() << "\","
       << c.chain.members[l - 1].block_count() << "," << dims[l - 1] << "," << c.excess << ","
       << c.e_bound << "," << ratio_csv(c.ratio, opts.exact) << "\n";
  }
}

int cmd_zebra(const std::optional<int>& a, int m, int n, int k, const Output& opts,
              std::ostream& out, std::ostream& err) {
  const cert::ZebraCertificate c =
      a ? cert::partial_zebra_certificate(*a, k) : cert::zebra_certificate(m, n, k);
  std::ostringstream buf;
  if (opts.format == "json")
    buf << zebra_json(c).dump(2) << "\n";
  else if (opts.format == "csv")
    render_zebra_csv(c, opts, buf);
  else
    render_zebra_text(c, opts, buf);
  return deliver(buf.str(), opts, out, err);
}

// ---------------------------------------------------------------- thuja

void render_thuja_text(const cert::ThujaCertificate& c, const Output& opts, std::ostream& os) {
  os << "thuja chain Th^" << c.k << "(" << c.n << ") in the associahedron on " << c.n
     << " leaves (dim " << c.chain.ambient_dim() << ")\n";
  const auto dims = c.chain.dims();
  for (int l = 1; l <= c.k; ++l) {
    os << "  l=" << l << ": " << c.chain.members[l - 1].json() << "  dim=" << dims[l - 1]
       << " (formula " << c.dims_formula[l - 1] << ")\n";
  }
  bool valid = true;
  os << "pairs:";
  for (size_t i = 0; i < c.pair_valid.size(); ++i) {
    valid = valid && c.pair_valid[i];
    os << " " << (i + 1) << "<=" << (i + 2) << ":" << (c.pair_valid[i] ? "ok" : "VIOLATED");
  }
  if (c.pair_valid.empty()) os << " (single member)";
  os << "\nvalid: " << (valid ? "yes" : "no") << "\n";
  os << "top(l) equals bottom(l+1):";
  for (bool b : c.top_matches_next_bottom) os << " " << (b ? "yes" : "no");
  if (c.top_matches_next_bottom.empty()) os << " (single member)";
  os << "\n";
  os << "excess: " << c.excess << " (formula " << c.excess_formula << ", "
     << (c.excess == c.excess_formula ? "MATCH" : "MISMATCH") << ")\n";
  os << "E_" << c.k << "(" << c.n - 2 << "): " << c.e_bound << "\n";
  os << "ratio: " << ratio_text(c.ratio, opts.exact) << "\n";
  os << "beta_finite: " << ratio_text(c.beta_finite, opts.exact) << "\n";
  if (c.k_length_bound) {
    os << "k-length bound (k-2)/(2k-2): " << ratio_text(c.k_length_bound, opts.exact);
    if (c.ratio)
      os << ", respected: " << (*c.ratio <= *c.k_length_bound ? "yes" : "no");
    os << "\n";
  }
}

ordered_json thuja_json(const cert::ThujaCertificate& c) {
  ordered_json j;
  j["command"] = "thuja";
  j["n"] = c.n;
  j["k"] = c.k;
  j["ambient_dim"] = c.chain.ambient_dim();
  ordered_json members = ordered_json::array();
  for (const auto& m : c.chain.members) members.push_back(ordered_json::parse(m.json()));
  j["members"] = members;
  j["member_dims"] = c.chain.dims();
  j["member_dims_formula"] = c.dims_formula;
  j["pair_valid"] = c.pair_valid;
  bool valid = true;
  for (bool b : c.pair_valid) valid = valid && b;
  j["valid"] = valid;
  j["top_matches_next_bottom"] = c.top_matches_next_bottom;
  j["excess"] = c.excess;
  j["excess_formula"] = c.excess_formula;
  j["facet_chain_excess"] = c.e_bound;
  j["ratio"] = ratio_json(c.ratio);
  j["beta_finite"] = ratio_json(c.beta_finite);
  j["k_length_bound"] = ratio_json(c.k_length_bound);
  return j;
}

void render_thuja_csv(const cert::ThujaCertificate& c, const Output& opts, std::ostream& os) {
  os << "l,member,dim,excess,E_k,ratio\n";
  const auto dims = c.chain.dims();
  for (int l = 1; l <= c.k; ++l) {
    os << l << ",\"" << c.chain.members[l - 1].json() << "\"," << dims[l - 1] << "," << c.excess
       << "," << c.e_bound << "," << ratio_csv(c.ratio, opts.exact) << "\n";
  }
}

int cmd_thuja(int n, int k, const Output& opts, std::ostream& out, std::ostream& err) {
  const cert::ThujaCertificate c = cert::thuja_certificate(n, k);
  std::ostringstream buf;
  if (opts.format == "json")
    buf << thuja_json(c).dump(2) << "\n";
  else if (opts.format == "csv")
    render_thuja_csv(c, opts, buf);
  else
    render_thuja_text(c, opts, buf);
  return deliver(buf.str(), opts, out, err);
}

// ---------------------------------------------------------------- shared family plumbing

core::OrientedPolytope build_polytope(const std::string& family, int n, const Caps& caps) {
  if (family == "perm") return perm::permutahedron_polytope(n, caps.perm);
  if (family == "assoc") return assoc::associahedron_polytope(n, caps.assoc);
  if (family == "simplex") return refpoly::simplex_polytope(n, caps.simplex);
  if (family == "cube") return refpoly::cube_polytope(n, caps.cube);
  throw std::invalid_argument("unknown family " + family);
}

// ---------------------------------------------------------------- min-excess

int cmd_min_excess(const std::string& family, int n, int k, const Caps& caps, const Output& opts,
                   std::ostream& out, std::ostream& err) {
  const core::OrientedPolytope p = build_polytope(family, n, caps);
  const auto report = core::min_excess(p, k);

  // Constructed chains bound the exact value from above where they exist.
  std::optional<long long> constructed;
  std::string constructed_name;
  if (family == "perm") {
    constructed = perm::partial_zebra_chain(n, k).excess();
    constructed_name = "partial zebra F^" + std::to_string(k) + "(" + std::to_string(n) + ")";
  } else if (family == "assoc" && k <= n - 1) {
    constructed = assoc::thuja_chain(n, k).excess();
    constructed_name = "thuja Th^" + std::to_string(k) + "(" + std::to_string(n) + ")";
  }

  std::ostringstream buf;
  if (opts.format == "json") {
    ordered_json j;
    j["command"] = "min-excess";
    j["family"] = family;
    j["n"] = n;
    j["k"] = k;
    j["polytope"] = p.name;
    j["faces"] = p.face_count();
    j["ambient_dim"] = p.ambient_dim;
    if (report) {
      j["e_k"] = report->e_k;
      j["f_k"] = report->f_k;
      ordered_json wit = ordered_json::array();
      for (int f : report->witness.faces) {
        ordered_json w;
        w["face"] = ordered_json::parse(p.faces[f].json);
        w["dim"] = p.faces[f].dim;
        wit.push_back(w);
      }
      j["witness"] = wit;
      j["facet_bound"] = core::facet_bound(k, p.ambient_dim);
    } else {
      j["e_k"] = nullptr;
      j["no_chain"] = true;
    }
    if (constructed) {
      j["constructed_chain"] = constructed_name;
      j["constructed_excess"] = *constructed;
    }
    buf << j.dump(2) << "\n";
  } else {
    buf << "min-excess family=" << family << " n=" << n << " k=" << k << "\n";
    buf << "polytope: " << p.name << ", " << p.face_count() << " faces, dim " << p.ambient_dim
        << "\n";
    if (report) {
      buf << "e_" << k << " = " << report->e_k << "\n";
      buf << "f_" << k << " = " << report->f_k << "\n";
      buf << "witness:\n";
      for (int f : report->witness.faces)
        buf << "  " << p.faces[f].label << "  (dim " << p.faces[f].dim << ")\n";
      buf << "facet bound E_" << k << "(" << p.ambient_dim
          << ") = " << core::facet_bound(k, p.ambient_dim) << "\n";
    } else {
      buf << "no chain of length " << k << " exists\n";
    }
    if (constructed && report)
      buf << "constructed chain (" << constructed_name << ") excess: " << *constructed
          << (*constructed >= report->e_k ? " >= e_k" : " < e_k (BUG)") << "\n";
  }
  return deliver(buf.str(), opts, out, err);
}

// ---------------------------------------------------------------- table

int cmd_table(const std::string& family, int k, int n_from, int n_to, int step, const Caps& caps,
              const Output& opts, std::ostream& out, std::ostream& err) {
  if (n_from > n_to) throw std::invalid_argument("table: empty range");
  if (step < 1) throw std::invalid_argument("table: step must be >= 1");

  std::vector<core::LengthPoint> points;
  for (int n = n_from; n <= n_to; n += step) {
    core::LengthPoint pt;
    pt.n = n;
    if (family == "perm") {
      if (n < 1) throw std::invalid_argument("table: perm rows need n >= 1");
      const auto chain = perm::zebra_chain(n, n, k);
      pt.ambient_dim = chain.ambient_dim();
      pt.excess = chain.excess();
      pt.facet_arg = static_cast<long long>(n) * n;
    } else if (family == "assoc") {
      if (n < 2 || k > n - 1)
        throw std::invalid_argument("table: assoc rows need n >= k+1 (thuja chains)");
      const auto chain = assoc::thuja_chain(n, k);
      pt.ambient_dim = chain.ambient_dim();
      pt.excess = chain.excess();
      pt.facet_arg = n - 2;
    } else {
      const core::OrientedPolytope p = build_polytope(family, n, caps);
      const auto report = core::min_excess(p, k);
      if (!report) throw std::invalid_argument("table: no chain of length " + std::to_string(k) +
                                               " in " + p.name);
      pt.ambient_dim = p.ambient_dim;
      pt.excess = report->e_k;
      pt.facet_arg = p.ambient_dim;
    }
    points.push_back(pt);
  }
  const core::LengthTable table = core::length_estimates(points, k);

  std::ostringstream buf;
  if (opts.format == "json") {
    ordered_json j;
    j["command"] = "table";
    j["family"] = family;
    j["k"] = k;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json r;
      r["n"] = row.n;
      r["k"] = row.k;
      r["excess"] = row.excess;
      r["E_k"] = row.e_bound;
      r["ratio"] = ratio_json(row.ratio);
      r["beta_finite"] = ratio_json(row.beta_finite);
      rows.push_back(r);
    }
    j["rows"] = rows;
    j["ratio_non_decreasing"] = table.ratio_non_decreasing;
    buf << j.dump(2) << "\n";
  } else if (opts.format == "text") {
    buf << "table family=" << family << " k=" << k << " n=" << n_from << ".." << n_to << "\n";
    buf << "n,k,excess,E_k,ratio,beta_finite\n";
    for (const auto& row : table.rows)
      buf << row.n << "," << row.k << "," << row.excess << "," << row.e_bound << ","
          << ratio_csv(row.ratio, opts.exact) << "," << ratio_csv(row.beta_finite, opts.exact)
          << "\n";
    buf << "ratio non-decreasing over range: " << (table.ratio_non_decreasing ? "yes" : "no")
        << "\n";
  } else {
    buf << "n,k,excess,E_k,ratio,beta_finite\n";
    for (const auto& row : table.rows)
      buf << row.n << "," << row.k << "," << row.excess << "," << row.e_bound << ","
          << ratio_csv(row.ratio, opts.exact) << "," << ratio_csv(row.beta_finite, opts.exact)
          << "\n";
    // keep the csv body clean; the trend summary goes to the diagnostic stream
    err << "ratio non-decreasing over range: " << (table.ratio_non_decreasing ? "yes" : "no")
        << "\n";
  }
  return deliver(buf.str(), opts, out, err);
}

// ---------------------------------------------------------------- short

int cmd_short(const std::string& family, int n, bool recursive, bool pairs_only, const Caps& caps,
              const Output& opts, std::ostream& out, std::ostream& err) {
  std::ostringstream buf;
  int code = kOk;

  if (pairs_only) {
    bool pass = true;
    std::string witness;
    long long checked = 0;
    if (family == "assoc") {
      const auto rep = assoc::two_short_check(n, caps.assoc);
      pass = rep.pass;
      witness = rep.witness;
      checked = rep.face_pairs_checked + rep.vertex_pairs_checked;
    } else {
      const core::OrientedPolytope p = build_polytope(family, n, caps);
      const auto rep = core::min_excess(p, 2);
      if (rep && rep->e_k <= 0) {
        pass = false;
        for (int f : rep->witness.faces) witness += p.faces[f].label + " ";
        witness += "(excess " + std::to_string(rep->e_k) + ")";
      }
      checked = p.face_count();
    }
    code = pass ? kOk : kPropertyFailed;
    if (opts.format == "json") {
      ordered_json j;
      j["command"] = "short";
      j["family"] = family;
      j["n"] = n;
      j["pairs_only"] = true;
      j["pass"] = pass;
      if (!pass) j["witness"] = witness;
      j["checked"] = checked;
      buf << j.dump(2) << "\n";
    } else {
      buf << "2-shortness family=" << family << " n=" << n << "\n";
      buf << "result: " << (pass ? "pass" : "fail") << "\n";
      if (!pass) buf << "witness: " << witness << "\n";
    }
    const int rc = deliver(buf.str(), opts, out, err);
    return rc != kOk ? rc : code;
  }

  const core::OrientedPolytope p = build_polytope(family, n, caps);
  const core::ShortnessReport rep = core::shortness_report(p, recursive);
  code = rep.is_short ? kOk : kPropertyFailed;

  if (opts.format == "json") {
    ordered_json j;
    j["command"] = "short";
    j["family"] = family;
    j["n"] = n;
    j["recursive"] = recursive;
    j["short"] = rep.is_short;
    j["regions_checked"] = rep.regions_checked;
    if (!rep.is_short && rep.witness) {
      j["violating_region"] = rep.violating_face.empty() ? p.name : rep.violating_face;
      ordered_json wit = ordered_json::array();
      for (size_t i = 0; i < rep.witness->labels.size(); ++i) {
        ordered_json w;
        w["face"] = rep.witness->labels[i];
        w["dim"] = rep.witness->dims[i];
        wit.push_back(w);
      }
      j["witness"] = wit;
      j["witness_excess"] = rep.witness->excess;
    }
    buf << j.dump(2) << "\n";
  } else {
    buf << "shortness family=" << family << " n=" << n
        << " recursive=" << (recursive ? "yes" : "no") << "\n";
    buf << "regions checked: " << rep.regions_checked << "\n";
    buf << "result: " << (rep.is_short ? "short" : "not short") << "\n";
    if (!rep.is_short && rep.witness) {
      buf << "violating region: "
          << (rep.violating_face.empty() ? "(the polytope itself)" : rep.violating_face) << "\n";
      buf << "witness chain (excess " << rep.witness->excess << "):\n";
      for (size_t i = 0; i < rep.witness->labels.size(); ++i)
        buf << "  " << rep.witness->labels[i] << "  (dim " << rep.witness->dims[i] << ")\n";
    }
  }
  const int rc = deliver(buf.str(), opts, out, err);
  return rc != kOk ? rc : code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"face-chain excess analysis for oriented polytopes"};
  app.require_subcommand(1);

  Output opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", opts.path, "write output to a file");
  app.add_flag("--exact", opts.exact, "render ratios as exact fractions");

  int m = 1, n = 1, k = 1, n_from = 0, n_to = 0, step = 1;
  std::optional<int> a;
  std::string family;
  bool recursive = false, pairs_only = false;
  bool format_given = false;

  CLI::App* zebra = app.add_subcommand("zebra", "build a zebra or partial zebra chain");
  zebra->add_option("--m", m, "grid rows");
  zebra->add_option("--n", n, "grid columns");
  auto* a_opt = zebra->add_option("--a", a, "partial grid: use only labels 1..a");
  zebra->add_option("--k", k, "chain length")->required();

  CLI::App* thuja = app.add_subcommand("thuja", "build a thuja chain");
  thuja->add_option("--n", n, "leaf count")->required();
  thuja->add_option("--k", k, "chain length")->required();

  CLI::App* minexc = app.add_subcommand("min-excess", "exact minimal excess by brute force");
  minexc->add_option("--family", family, "perm|assoc|simplex|cube")->required();
  minexc->add_option("--n", n, "instance parameter")->required();
  minexc->add_option("--k", k, "chain length")->required();

  CLI::App* table = app.add_subcommand("table", "convergence table over a range of n");
  table->add_option("--family", family, "perm|assoc|simplex|cube")->required();
  table->add_option("--k", k, "chain length")->required();
  table->add_option("--n-from", n_from, "range start")->required();
  table->add_option("--n-to", n_to, "range end")->required();
  table->add_option("--step", step, "range step");

  CLI::App* shortcmd = app.add_subcommand("short", "shortness check");
  shortcmd->add_option("--family", family, "perm|assoc|simplex|cube")->required();
  shortcmd->add_option("--n", n, "instance parameter")->required();
  shortcmd->add_flag("--recursive", recursive, "also check inside every proper face");
  shortcmd->add_flag("--pairs-only", pairs_only, "check length-2 chains only");

  for (CLI::App* sub : {zebra, thuja, minexc, table, shortcmd}) {
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->each([&](const std::string&) { format_given = true; });
    sub->add_option("--out", opts.path, "write output to a file");
    sub->add_flag("--exact", opts.exact, "render ratios as exact fractions");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  const Caps caps = read_caps(err);
  try {
    if (zebra->parsed()) {
      if (!format_given && opts.format.empty()) opts.format = "text";
      if (*a_opt) return cmd_zebra(a, m, n, k, opts, out, err);
      return cmd_zebra(std::nullopt, m, n, k, opts, out, err);
    }
    if (thuja->parsed()) return cmd_thuja(n, k, opts, out, err);
    if (minexc->parsed()) return cmd_min_excess(family, n, k, caps, opts, out, err);
    if (table->parsed()) {
      if (!format_given) opts.format = "csv";
      return cmd_table(family, k, n_from, n_to, step, caps, opts, out, err);
    }
    if (shortcmd->parsed())
      return cmd_short(family, n, recursive, pairs_only, caps, opts, out, err);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
  err << "usage error: no command\n";
  return kUsageError;
}

}  // namespace chainex::cli
