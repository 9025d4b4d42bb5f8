#include "covercalc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "covercalc/branched_cover.hpp"
#include "covercalc/error.hpp"
#include "covercalc/geometry_bounds.hpp"
#include "covercalc/knot_model.hpp"
#include "covercalc/ribbon_obstruct.hpp"

namespace covercalc::cli {

namespace {

using nlohmann::json;

// Big integers stay numeric in JSON whenever they fit in 64 bits.
json big(const mpz_class& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return x.get_si();
  return x.get_str();
}

std::string big_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string real_text(const json& v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v.get<double>();
  return os.str();
}

std::string opt_text(const json& v) { return v.is_null() ? "-" : v.dump(); }

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                         const std::string& indent = "") {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = display_width(header[i]);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    std::string s = indent;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(width[i] - display_width(r[i]) + 2, ' ');
    }
    os << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

struct Range {
  std::uint64_t lo;
  std::uint64_t hi;
};

Range parse_range(const std::string& text) {
  auto parse_one = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("invalid range '" + text + "'");
    }
    return std::stoull(s);
  };
  Range r{};
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_one(text);
  } else {
    r.lo = parse_one(text.substr(0, dots));
    r.hi = parse_one(text.substr(dots + 2));
  }
  if (r.lo < 1 || r.lo > r.hi) throw DomainError("invalid range '" + text + "': need 1 <= a <= b");
  return r;
}

struct TableSource {
  KnotTable table;
  std::string label;
};

TableSource open_table(const std::string& flag) {
  if (!flag.empty()) return {load_table_file(flag), flag};
  if (const char* env = std::getenv("COVERCALC_TABLE"); env != nullptr && *env != '\0') {
    return {load_table_file(env), env};
  }
  return {bundled_table(), "bundled"};
}

json knot_summary(const Knot& k) {
  json coeffs = json::array();
  for (const auto& c : k.alexander.coeffs()) coeffs.push_back(big(c));
  return {{"name", k.name},
          {"alexander", k.alexander.to_string()},
          {"coeffs", coeffs},
          {"half_degree", k.alexander.half_degree()},
          {"genus", k.genus ? json(*k.genus) : json(nullptr)},
          {"arc_index", k.arc_index ? json(*k.arc_index) : json(nullptr)},
          {"fibered", k.fibered},
          {"seifert", k.seifert.has_value()}};
}

json params_json(const ObstructParams& p) { return {{"primes", p.primes}, {"max_n", p.max_n}}; }

// ---- record builders -----------------------------------------------------

json table_record(const TableSource& src, const std::string& action) {
  json rec{{"command", "table"}, {"action", action}, {"source", src.label}};
  json knots = json::array();
  for (const auto& k : src.table.entries()) {
    if (action == "list") {
      knots.push_back(knot_summary(k));
    } else {
      knots.push_back({{"name", k.name},
                       {"tilde_at_one", big(eval_at(k.alexander.tilde(), 1))},
                       {"seifert", k.seifert ? "consistent" : "absent"}});
    }
  }
  rec["knots"] = std::move(knots);
  return rec;
}

json cover_record(const Knot& k, const Range& range, const std::vector<std::uint64_t>& primes) {
  for (auto p : primes) require_prime(p, "cover --p");
  json rows = json::array();
  for (std::uint64_t n = range.lo; n <= range.hi; ++n) {
    const CoverOrder o = fox_order(k, n);
    json row{{"n", n}, {"order", big(o.order)}, {"infinite", o.infinite()}};
    json spheres = json::object();
    for (auto p : primes) spheres[std::to_string(p)] = is_zp_homology_sphere(k, n, p);
    row["zp_sphere"] = std::move(spheres);
    rows.push_back(std::move(row));
  }
  return {{"command", "cover"},
          {"knot", k.name},
          {"alexander", k.alexander.to_string()},
          {"primes", primes},
          {"rows", std::move(rows)}};
}

json skp_record(const Knot& k, std::uint64_t p) {
  const PrimeSet s = skp_set(k, p);
  json degrees = json::array();
  for (const auto& e : irreducible_factor_degrees(ModPoly::reduce(k.alexander.tilde(), p)).entries) {
    degrees.push_back({{"degree", e.degree}, {"count", e.count}});
  }
  json set = json::array();
  for (const auto& q : s.primes()) set.push_back(big(q));
  return {{"command", "skp"}, {"knot", k.name}, {"p", p}, {"degrees", std::move(degrees)}, {"set", std::move(set)}};
}

json obstruct_record(const Knot& j, const Knot& k, const ObstructParams& params) {
  return {{"command", "obstruct"}, {"params", params_json(params)}, {"report", to_json(obstruct(j, k, params))}};
}

json filter_record(const Knot& k, const TableSource& src, const ObstructParams& params) {
  return {{"command", "filter"},
          {"knot", k.name},
          {"source", src.label},
          {"table_size", src.table.size()},
          {"params", params_json(params)},
          {"predecessors", filter_predecessors(k, src.table, params)}};
}

json bounds_record(const Knot& k, std::optional<long> delta_flag, std::optional<long> genus_flag,
                   const std::string& samples_path) {
  const std::optional<long> genus = genus_flag ? genus_flag : k.genus;
  const std::optional<long> delta = delta_flag ? delta_flag : k.arc_index;
  if (!genus) throw DataError("bounds: genus of '" + k.name + "' is unknown; pass --genus");
  if (!delta) throw DataError("bounds: arc index of '" + k.name + "' is unknown; pass --delta");
  if (*genus < 1) throw DomainError("bounds: genus must be >= 1");
  if (*delta < 2) throw DomainError("bounds: arc index must be >= 2");
  const auto d = static_cast<std::uint64_t>(*delta);

  json rec{{"command", "bounds"},
           {"knot", k.name},
           {"genus", *genus},
           {"arc_index", *delta},
           {"gromov_norm_bound", gromov_norm_bound(*genus, d)}};
  json hfk = json::array();
  for (std::uint64_t n = 1; n <= 3; ++n) {
    const HfkDimBound b = hfk_dim_upper(d, n);
    hfk.push_back({{"n", n}, {"tight", big(b.tight)}, {"loose", big(b.loose)}});
  }
  rec["hfk_dim_upper"] = std::move(hfk);

  if (!samples_path.empty()) {
    std::ifstream in(samples_path);
    if (!in) throw DataError("cannot open samples file '" + samples_path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw DataError(std::string("samples file parse error: ") + e.what());
    }
    if (!doc.is_array()) throw DataError("samples file must be a JSON array");
    std::vector<FixSample> samples;
    for (const auto& s : doc) {
      if (!s.is_object() || !s.contains("n") || !s.contains("count") || !s["n"].is_number_unsigned()) {
        throw DataError("each sample needs a positive integer 'n' and a 'count'");
      }
      FixSample fs;
      fs.n = s["n"].get<std::uint64_t>();
      if (s["count"].is_number_integer()) {
        fs.count = s["count"].get<long>();
      } else if (s["count"].is_string()) {
        try {
          fs.count = mpz_class(s["count"].get<std::string>());
        } catch (const std::invalid_argument&) {
          throw DataError("bad sample count '" + s["count"].get<std::string>() + "'");
        }
      } else {
        throw DataError("sample 'count' must be an integer");
      }
      samples.push_back(std::move(fs));
    }
    const DilatationEstimate est = dilatation_upper(samples);
    json dil{{"upper", est.upper}, {"degenerate", est.degenerate}};
    if (est.upper > 0) {
      dil["best_n"] = est.witnesses[est.best].n;
      dil["best_count"] = big(est.witnesses[est.best].count);
    }
    rec["dilatation"] = dil;
    if (est.upper > 1.0) {
      // The fiber of a genus-g fibered knot has Euler characteristic 1 - 2g.
      const double vol = km_volume_bound(1 - 2 * *genus, est.upper);
      rec["volume_bound"] = vol;
      rec["norm_from_dilatation"] = vol / Constants::v3;
    }
  }
  return rec;
}

// ---- text rendering ------------------------------------------------------

std::string render_table(const json& r) {
  std::ostringstream os;
  const auto& knots = r.at("knots");
  if (r.at("action") == "list") {
    os << "Knot table (" << r.at("source").get<std::string>() << "): " << knots.size() << " entries\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& k : knots) {
      rows.push_back({k.at("name").get<std::string>(), k.at("alexander").get<std::string>(), opt_text(k.at("genus")),
                      opt_text(k.at("arc_index")), k.at("fibered").get<bool>() ? "yes" : "no",
                      k.at("seifert").get<bool>() ? "yes" : "no"});
    }
    os << format_table({"name", "alexander", "genus", "arc", "fibered", "seifert"}, rows);
  } else {
    os << "Knot table (" << r.at("source").get<std::string>() << "): " << knots.size()
       << " entries, all invariants hold\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& k : knots) {
      rows.push_back({k.at("name").get<std::string>(), big_text(k.at("tilde_at_one")), k.at("seifert").get<std::string>()});
    }
    os << format_table({"name", "Delta(1)", "seifert"}, rows);
  }
  return os.str();
}

std::string render_cover(const json& r) {
  std::ostringstream os;
  os << "Knot " << r.at("knot").get<std::string>() << ": Delta = " << r.at("alexander").get<std::string>() << "\n";
  std::vector<std::string> header{"n", "|H1|"};
  for (const auto& p : r.at("primes")) header.push_back("Z/" + p.dump() + "-sphere");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r.at("rows")) {
    std::vector<std::string> cells{row.at("n").dump(),
                                   row.at("infinite").get<bool>() ? "∞" : big_text(row.at("order"))};
    for (const auto& p : r.at("primes")) {
      cells.push_back(row.at("zp_sphere").at(p.dump()).get<bool>() ? "yes" : "no");
    }
    rows.push_back(std::move(cells));
  }
  os << format_table(header, rows);
  return os.str();
}

std::string render_skp(const json& r) {
  std::ostringstream os;
  const std::string p = r.at("p").dump();
  os << "Knot " << r.at("knot").get<std::string>() << ", p = " << p << "\n";
  os << "irreducible factor degrees mod " << p << ":";
  if (r.at("degrees").empty()) os << " none";
  for (const auto& d : r.at("degrees")) os << " " << d.at("degree").dump() << " (x" << d.at("count").dump() << ")";
  os << "\nS = {";
  bool first = true;
  for (const auto& q : r.at("set")) {
    os << (first ? "" : ", ") << big_text(q);
    first = false;
  }
  os << "}\n";
  return os.str();
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string render_obstruct(const json& r) {
  const json& rep = r.at("report");
  std::ostringstream os;
  os << "Ribbon concordance " << rep.at("candidate").at("j").get<std::string>() << " <= "
     << rep.at("candidate").at("k").get<std::string>() << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : rep.at("checks")) {
    std::string v = c.at("verdict").get<std::string>();
    rows.push_back({c.at("id").get<std::string>(), v == "skipped" ? "SKIP" : upper(v), c.at("detail").get<std::string>()});
  }
  os << format_table({"check", "verdict", "detail"}, rows, "  ");
  os << "overall: " << upper(rep.at("overall").get<std::string>()) << " (" << rep.at("summary").get<std::string>()
     << ")\n";
  return os.str();
}

std::string render_filter(const json& r) {
  std::ostringstream os;
  const auto& names = r.at("predecessors");
  os << "Not obstructed as ribbon predecessors of " << r.at("knot").get<std::string>() << " (" << names.size()
     << " of " << r.at("table_size").dump() << " in " << r.at("source").get<std::string>() << " table):\n";
  for (const auto& n : names) os << "  " << n.get<std::string>() << "\n";
  return os.str();
}

std::string render_bounds(const json& r) {
  std::ostringstream os;
  os << "Knot " << r.at("knot").get<std::string>() << ": genus " << r.at("genus").dump() << ", arc index "
     << r.at("arc_index").dump() << "\n";
  os << "Gromov norm bound for fibered predecessors: " << real_text(r.at("gromov_norm_bound")) << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& h : r.at("hfk_dim_upper")) {
    rows.push_back({h.at("n").dump(), big_text(h.at("tight")), big_text(h.at("loose"))});
  }
  os << "HFK dimension bounds for the n-fold cover:\n" << format_table({"n", "tight", "loose"}, rows, "  ");
  if (r.contains("dilatation")) {
    const json& d = r.at("dilatation");
    os << "Dilatation upper estimate: " << real_text(d.at("upper"));
    if (d.contains("best_n")) os << " (n = " << d.at("best_n").dump() << ", count = " << big_text(d.at("best_count")) << ")";
    if (d.at("degenerate").get<bool>()) os << " [degenerate: zero count ignored]";
    os << "\n";
  }
  if (r.contains("volume_bound")) {
    os << "Volume bound 3pi|chi|log(lambda): " << real_text(r.at("volume_bound")) << "\n";
    os << "Gromov norm from dilatation: " << real_text(r.at("norm_from_dilatation")) << "\n";
  }
  return os.str();
}

}  // namespace

std::string render_text(const json& record) {
  try {
    const std::string cmd = record.at("command").get<std::string>();
    if (cmd == "table") return render_table(record);
    if (cmd == "cover") return render_cover(record);
    if (cmd == "skp") return render_skp(record);
    if (cmd == "obstruct") return render_obstruct(record);
    if (cmd == "filter") return render_filter(record);
    if (cmd == "bounds") return render_bounds(record);
    throw DataError("unknown record command '" + cmd + "'");
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed record: ") + e.what());
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branched-cover homology, prime obstruction sets and ribbon concordance filters for knots",
               "covercalc"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string table_path;
  app.add_flag("--json", as_json, "Emit machine-readable JSON");
  app.add_option("--table", table_path, "Knot table JSON (default: $COVERCALC_TABLE, then the bundled table)");
  app.fallthrough();

  auto* table_cmd = app.add_subcommand("table", "List or validate the knot table");
  std::string table_action;
  table_cmd->add_option("action", table_action, "list | check")->required()->check(CLI::IsMember({"list", "check"}));

  auto* cover_cmd = app.add_subcommand("cover", "Orders of H_1 of cyclic branched covers");
  std::string cover_knot, cover_range;
  std::vector<std::uint64_t> cover_primes;
  cover_cmd->add_option("name", cover_knot)->required();
  cover_cmd->add_option("--n", cover_range, "n or a..b (inclusive)")->required();
  cover_cmd->add_option("-p,--p", cover_primes, "Report Z/p-homology-sphere status (repeatable)");

  auto* skp_cmd = app.add_subcommand("skp", "Prime obstruction set S_{K,p}");
  std::string skp_knot;
  std::uint64_t skp_p = 0;
  skp_cmd->add_option("name", skp_knot)->required();
  skp_cmd->add_option("-p,--p", skp_p)->required();

  ObstructParams params;
  auto* obs_cmd = app.add_subcommand("obstruct", "Necessary conditions for ribbon concordance J <= K");
  std::string obs_j, obs_k;
  std::vector<std::uint64_t> obs_primes;
  bool strict = false;
  obs_cmd->add_option("J", obs_j)->required();
  obs_cmd->add_option("K", obs_k)->required();
  obs_cmd->add_option("-p,--p", obs_primes, "Primes for S_{K,p} checks (default 2 3 5)");
  obs_cmd->add_option("--max-n", params.max_n, "Largest cover degree for H_1 checks")->check(CLI::PositiveNumber);
  obs_cmd->add_flag("--strict", strict, "Exit 1 when obstructed");

  auto* filter_cmd = app.add_subcommand("filter", "Table knots not obstructed as ribbon predecessors of K");
  std::string filter_knot;
  filter_cmd->add_option("K", filter_knot)->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Gromov norm, HFK and dilatation bounds");
  std::string bounds_knot, samples_path;
  std::optional<long> delta_flag, genus_flag;
  bounds_cmd->add_option("name", bounds_knot)->required();
  bounds_cmd->add_option("--delta", delta_flag, "Arc index override");
  bounds_cmd->add_option("--genus", genus_flag, "Genus override");
  bounds_cmd->add_option("--samples", samples_path, "JSON [{\"n\":2,\"count\":9},...]");

  auto* render_cmd = app.add_subcommand("render", "Render a --json record as text");
  std::string render_path = "-";
  render_cmd->add_option("file", render_path, "Record file, or - for stdin");

  std::vector<const char*> argv{"covercalc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    json record;
    int status = kOk;
    if (*render_cmd) {
      std::string text;
      if (render_path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else {
        std::ifstream in(render_path);
        if (!in) throw DataError("cannot open '" + render_path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      try {
        record = json::parse(text);
      } catch (const json::parse_error& e) {
        throw DataError(std::string("render: parse error: ") + e.what());
      }
      out << render_text(record);
      return kOk;
    }

    const TableSource src = open_table(table_path);
    if (*table_cmd) {
      record = table_record(src, table_action);
    } else if (*cover_cmd) {
      record = cover_record(src.table.at(cover_knot), parse_range(cover_range), cover_primes);
    } else if (*skp_cmd) {
      record = skp_record(src.table.at(skp_knot), skp_p);
    } else if (*obs_cmd) {
      if (!obs_primes.empty()) params.primes = obs_primes;
      record = obstruct_record(src.table.at(obs_j), src.table.at(obs_k), params);
      if (strict && record["report"]["overall"] == "fail") status = kObstructed;
    } else if (*filter_cmd) {
      record = filter_record(src.table.at(filter_knot), src, params);
    } else if (*bounds_cmd) {
      record = bounds_record(src.table.at(bounds_knot), delta_flag, genus_flag, samples_path);
    }
    out << (as_json ? record.dump(2) + "\n" : render_text(record));
    return status;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace covercalc::cli
