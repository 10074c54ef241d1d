// cli.cpp
#include "ig2/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "ig2/certificates.hpp"
#include "ig2/motives.hpp"
#include "ig2/report.hpp"
#include "ig2/shapes.hpp"

namespace ig2 {

namespace {

using Json = nlohmann::ordered_json;

std::string action_string(const std::vector<int>& action) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < action.size(); ++k) {
    if (k) os << ',';
    if (action[k] < 0) os << "-e" << -action[k];
    else os << 'e' << action[k];
  }
  os << ')';
  return os.str();
}

void print_items_text(std::ostream& out, const CertificateReport& rep, bool full) {
  TableData t;
  t.headers = {"item", "display", "status", "details"};
  for (const auto& item : rep.items)
    t.rows.push_back({item.name, item.display, item.pass ? "pass" : "FAIL", item.details});
  out << "n = " << rep.n << "\n" << render_table_text(t);
  if (full) {
    out << "assumptions (cited, not machine-checked):\n";
    for (const auto& a : rep.assumptions) out << "  - " << a.name << ": " << a.statement << "\n";
  }
  for (const auto& note : rep.notes) out << "note: " << note << "\n";
  out << "verdict: " << (rep.verdict ? "true" : "false") << "\n";
}

void print_items_csv(std::ostream& out, const CertificateReport& rep, bool full) {
  TableData t;
  t.headers = {"kind", "name", "display", "status", "details"};
  for (const auto& item : rep.items)
    t.rows.push_back({"item", item.name, item.display, item.pass ? "pass" : "fail", item.details});
  if (full)
    for (const auto& a : rep.assumptions) t.rows.push_back({"assumption", a.name, "", "", a.statement});
  for (const auto& note : rep.notes) t.rows.push_back({"note", "", "", "", note});
  t.rows.push_back({"verdict", "", "", rep.verdict ? "true" : "false", ""});
  out << render_table_csv(t);
}

Json items_json(const CertificateReport& rep, bool full, const std::string& check_name) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["n"] = rep.n;
  if (!check_name.empty()) j["check"] = check_name;
  Json items = Json::array();
  for (const auto& item : rep.items) {
    Json ji;
    ji["name"] = item.name;
    ji["display"] = item.display;
    ji["status"] = item.pass ? "pass" : "fail";
    ji["details"] = item.details;
    items.push_back(ji);
  }
  j["items"] = items;
  if (full) {
    Json as = Json::array();
    for (const auto& a : rep.assumptions) {
      Json ja;
      ja["name"] = a.name;
      ja["statement"] = a.statement;
      as.push_back(ja);
    }
    j["assumptions"] = as;
  }
  j["notes"] = rep.notes;
  j["verdict"] = rep.verdict;
  return j;
}

int emit_report(std::ostream& out, const CertificateReport& rep, const std::string& format,
                bool full, const std::string& check_name) {
  if (format == "json") {
    out << items_json(rep, full, check_name).dump(2) << "\n";
  } else if (format == "csv") {
    print_items_csv(out, rep, full);
  } else {
    print_items_text(out, rep, full);
  }
  return rep.verdict ? 0 : 1;
}

int cmd_shapes(std::ostream& out, int n, std::optional<int> weight, const std::string& format) {
  auto shapes = enumerate_shapes(n, weight);
  if (format == "json") {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["n"] = n;
    if (weight) j["weight"] = *weight;
    j["count"] = shapes.size();
    Json rows = Json::array();
    for (const auto& s : shapes) {
      Json r;
      r["shape"] = s.to_string();
      r["weight"] = s.weight();
      r["bottomLength"] = s.bottom_length();
      rows.push_back(r);
    }
    j["shapes"] = rows;
    out << j.dump(2) << "\n";
  } else {
    TableData t;
    t.headers = {"shape", "weight", "bottomLength"};
    for (const auto& s : shapes)
      t.rows.push_back({s.to_string(), std::to_string(s.weight()), std::to_string(s.bottom_length())});
    out << (format == "csv" ? render_table_csv(t) : render_table_text(t));
  }
  return 0;
}

int cmd_weyl_table(std::ostream& out, int n, const std::string& format) {
  auto rep = weyl_table(n);
  if (format == "json") {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["n"] = n;
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
      Json jr;
      jr["row"] = r.row;
      jr["word"] = r.listed_word;
      jr["action"] = action_string(r.action);
      jr["length"] = r.min_length;
      jr["cosetSize"] = r.coset_size;
      jr["minRep"] = r.min_rep.to_string();
      jr["rd"] = r.r_d.to_string();
      jr["note"] = r.note;
      rows.push_back(jr);
    }
    j["rows"] = rows;
    j["notes"] = rep.notes;
    j["verdict"] = rep.pass;
    out << j.dump(2) << "\n";
  } else {
    TableData t;
    t.headers = {"row", "word", "action", "length", "cosetSize", "minRep", "R_D", "note"};
    for (const auto& r : rep.rows)
      t.rows.push_back({std::to_string(r.row), r.listed_word, action_string(r.action),
                        std::to_string(r.min_length), std::to_string(r.coset_size),
                        r.min_rep.to_string(), r.r_d.to_string(), r.note});
    out << (format == "csv" ? render_table_csv(t) : render_table_text(t));
    if (format == "text")
      out << "verdict: " << (rep.pass ? "true" : "false") << "\n";
  }
  return rep.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of the Schubert calculus behind rank-2 isotropic Grassmannians"};
  app.name("ig2");
  app.fallthrough(true);

  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  std::string cache_dir;
  app.add_option("--cache", cache_dir, "structure-table cache directory");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for sampled checks");

  int n_shapes = 5, n_table = 5, n_check = 5, n_report = 5;
  std::optional<int> weight;

  auto* sub_shapes = app.add_subcommand("shapes", "enumerate the valid shapes for rank n");
  sub_shapes->add_option("--n", n_shapes, "rank (default 5)");
  sub_shapes->add_option("--weight", weight, "restrict to one weight");

  auto* sub_table = app.add_subcommand("weyl-table", "the double-coset table with actions and R_D");
  sub_table->add_option("--n", n_table, "rank (default 5)");

  auto* sub_check = app.add_subcommand("check", "run one verification bundle");
  std::string which;
  sub_check->add_option("which", which, "mult | lemma | motive | pairing | generation")
      ->required()
      ->check(CLI::IsMember({"mult", "lemma", "motive", "pairing", "generation"}));
  sub_check->add_option("--n", n_check, "rank (default 5)");

  auto* sub_report = app.add_subcommand("report", "full certificate: every machine-checkable identity");
  sub_report->add_option("--n", n_report, "rank (default 5)");
  bool inject_fault = false;
  sub_report->add_flag("--inject-fault", inject_fault,
                       "testing hook: corrupt one structure constant (verdict must flip)");

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::stringstream ss;
    ss << app.help();
    out << ss.str();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  CertificateOptions opts;
  opts.seed = seed;
  if (!cache_dir.empty()) opts.cache_dir = cache_dir;

  auto bad_n = [&](int n, int lo, int hi, const char* what) {
    if (n < lo || n > hi) {
      err << "invalid n for " << what << ": " << n << " (allowed " << lo << ".." << hi << ")\n";
      return true;
    }
    return false;
  };

  try {
    if (sub_shapes->parsed()) {
      if (bad_n(n_shapes, 3, 40, "shapes")) return 2;
      return cmd_shapes(out, n_shapes, weight, format);
    }
    if (sub_table->parsed()) {
      if (bad_n(n_table, 3, 9, "weyl-table")) return 2;
      return cmd_weyl_table(out, n_table, format);
    }
    if (sub_check->parsed()) {
      const bool oracle_backed = which != "motive";
      if (bad_n(n_check, 3, oracle_backed ? 6 : 9, ("check " + which).c_str())) return 2;
      auto rep = check_bundle(which, n_check, opts);
      return emit_report(out, rep, format, false, which);
    }
    if (sub_report->parsed()) {
      if (bad_n(n_report, 3, 6, "report")) return 2;
      auto o = opts;
      o.inject_fault = inject_fault;
      auto rep = incompressibility_certificate(n_report, o);
      return emit_report(out, rep, format, true, "");
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace ig2
