#include "cli.hpp"

#include "cubic/acceptance.hpp"
#include "cubic/census.hpp"
#include "cubic/errors.hpp"
#include "cubic/obstruction.hpp"
#include "cubic/oracle.hpp"
#include "cubic/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace cubic::cli {
namespace {

using report::Json;

struct GlobalOptions {
  std::string format = "table";
  std::string out_file;
  bool batch = false;
};

// --- rendering ---------------------------------------------------------------

std::string scalar_text(Json const& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

bool all_scalars(Json const& j) {
  return std::all_of(j.begin(), j.end(), [](Json const& x) { return x.is_primitive(); });
}

using Fields = std::vector<std::pair<std::string, std::string>>;

void flatten(Json const& j, std::string const& prefix, Fields& out) {
  if (j.is_object()) {
    if (j.empty()) out.emplace_back(prefix, "");
    for (auto const& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !all_scalars(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out.emplace_back(prefix, scalar_text(j));
  }
}

std::string csv_cell(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_line(std::vector<std::string> const& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
  return out + "\n";
}

std::string render_csv(std::vector<Json> const& payloads) {
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
  for (auto const& p : payloads) {
    Fields fields;
    flatten(p, "", fields);
    std::map<std::string, std::string> row;
    for (auto const& [k, v] : fields) {
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
      row[k] = v;
    }
    rows.push_back(std::move(row));
  }
  std::string out = csv_line(header);
  for (auto const& row : rows) {
    std::vector<std::string> cells;
    for (auto const& h : header) {
      auto const it = row.find(h);
      cells.push_back(it == row.end() ? "" : it->second);
    }
    out += csv_line(cells);
  }
  return out;
}

std::string render_table(std::vector<Json> const& payloads) {
  std::string out;
  for (std::size_t n = 0; n < payloads.size(); ++n) {
    Fields fields;
    flatten(payloads[n], "", fields);
    std::size_t width = 0;
    for (auto const& f : fields) width = std::max(width, f.first.size());
    if (n) out += "\n";
    for (auto const& [k, v] : fields) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  }
  return out;
}

std::string render_columns(std::vector<std::string> const& header,
                           std::vector<std::vector<std::string>> const& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (auto const& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  auto line = [&](std::vector<std::string> const& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c)
      s += (c ? "  " : "") + cells[c] + std::string(width[c] - cells[c].size(), ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out += s + "\n";
  };
  line(header);
  for (auto const& r : rows) line(r);
  return out;
}

std::string render(std::vector<Json> const& payloads, std::string const& format, bool batch) {
  if (format == "json") {
    if (batch) return Json(payloads).dump(2) + "\n";
    return payloads.front().dump(2) + "\n";
  }
  if (format == "csv") return render_csv(payloads);
  return render_table(payloads);
}

// --- commands on one class ---------------------------------------------------

Json with_class(DivisorClass const& c, Json body) {
  Json out = {{"class", to_string(c)}};
  for (auto const& [k, v] : body.items()) out[k] = v;
  return out;
}

using ClassCommand = std::function<Json(DivisorClass const&)>;

std::vector<std::pair<std::string, std::string>> const& class_command_help() {
  static std::vector<std::pair<std::string, std::string>> const help = {
      {"reduce", "Reduce a class to standard form and print the Weyl word"},
      {"invariants", "Degree, genus and smooth-member test of a curve class"},
      {"cohomology", "h0, h1, h2, chi, nef/effective tests and the fixed part"},
      {"normality", "h1(I_C(n)) for n = 1, 2, 3 and the s-invariant"},
      {"classify", "Obstructedness verdict of the general curve in the class"},
      {"hilbert-dim", "Local dimension of the Hilbert scheme at the general curve"},
      {"kleppe", "Status of the non-reduced component conjecture for the family"},
  };
  return help;
}

ClassCommand class_command(std::string const& name) {
  if (name == "reduce")
    return [](DivisorClass const& c) { return report::reduction(reduce_to_standard(c)); };
  if (name == "invariants") return [](DivisorClass const& c) { return report::curve_invariants(c); };
  if (name == "cohomology") return [](DivisorClass const& c) { return report::cohomology(c); };
  if (name == "normality")
    return [](DivisorClass const& c) { return report::normality(normality_profile(c)); };
  if (name == "classify")
    return [](DivisorClass const& c) { return with_class(c, report::verdict(classify(c))); };
  if (name == "hilbert-dim") return [](DivisorClass const& c) { return report::hilbert_dim(c); };
  if (name == "kleppe")
    return [](DivisorClass const& c) { return with_class(c, report::kleppe(kleppe_verdict(c))); };
  return {};
}

std::string trim(std::string s) {
  auto const not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// Thrown for usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Class strings from the positional argument or, in batch mode, one per stdin line.
std::vector<std::string> class_inputs(std::optional<std::string> const& positional, bool batch,
                                      std::istream& in) {
  if (batch) {
    if (positional) throw UsageError("--stdin reads classes from standard input; drop CLASS");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (!line.empty() && line.front() != '#') out.push_back(line);
    }
    if (out.empty()) throw UsageError("--stdin: no classes on standard input");
    return out;
  }
  if (!positional) throw UsageError("missing CLASS argument, e.g. \"12;4,4,4,4,2,2\"");
  return {*positional};
}

// --- output ------------------------------------------------------------------

void emit(std::string const& text, GlobalOptions const& opts, std::ostream& out) {
  if (opts.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_file, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + opts.out_file);
  file << text;
  if (!file) throw UsageError("cannot write output file " + opts.out_file);
}

std::string census_text(CensusResult const& result, std::string const& format) {
  if (format == "json") return report::census(result).dump(2) + "\n";
  if (format == "csv") return report::census_csv(result.records);
  std::vector<std::vector<std::string>> rows;
  for (auto const& r : result.records) rows.push_back(report::census_row(r));
  return render_columns(report::census_columns(), rows) + std::to_string(result.records.size()) +
         " families, " + std::to_string(result.empty_cells.size()) +
         " (d,g) pairs without families\n";
}

std::string verify_text(std::vector<acceptance::ExampleRow> const& rows,
                        std::vector<acceptance::CheckResult> const& checks, bool passed,
                        std::string const& format) {
  if (format == "json") {
    Json examples = Json::array(), criteria = Json::array();
    for (auto const& r : rows)
      examples.push_back({{"example", r.example},
                          {"quantity", r.quantity},
                          {"expected", r.expected},
                          {"actual", r.actual},
                          {"status", acceptance::status_label(r.status, r.flag)}});
    for (auto const& c : checks)
      criteria.push_back({{"id", c.id},
                          {"title", c.title},
                          {"status", acceptance::status_label(c.status)},
                          {"detail", c.detail},
                          {"notes", c.notes}});
    return Json{{"examples", examples}, {"criteria", criteria}, {"passed", passed}}.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = csv_line({"kind", "item", "quantity", "expected", "actual", "status"});
    for (auto const& r : rows)
      out += csv_line({"example", r.example, r.quantity, r.expected, r.actual,
                       acceptance::status_label(r.status, r.flag)});
    for (auto const& c : checks) {
      out += csv_line({"criterion", std::to_string(c.id), c.title, "", c.detail,
                       acceptance::status_label(c.status)});
      for (auto const& n : c.notes)
        out += csv_line({"note", std::to_string(c.id), c.title, "", "", n});
    }
    return out;
  }
  std::size_t flagged = 0;
  for (auto const& r : rows) flagged += r.status == acceptance::Status::Flagged;
  return acceptance::format_examples(rows) + "\n" + acceptance::format_criteria(checks) + "\n" +
         std::to_string(rows.size()) + " worked-example rows (" + std::to_string(flagged) +
         " flagged), " + std::to_string(checks.size()) + " criteria: " +
         (passed ? "all pass" : "FAILURES") + "\n";
}

int dispatch(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Hilbert-scheme invariants of space curves on smooth cubic surfaces",
               "cubichilb"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--out", opts.out_file, "Write the payload to FILE instead of stdout");
  app.add_flag("--stdin", opts.batch, "Read one CLASS per line from standard input");

  std::map<std::string, std::optional<std::string>> class_args;
  std::map<std::string, CLI::App*> class_apps;
  for (auto const& [name, help] : class_command_help()) {
    auto* sub = app.add_subcommand(name, help);
    class_args[name];
    sub->add_option("CLASS", class_args[name], "Class as \"a;b1,b2,b3,b4,b5,b6\"");
    class_apps[name] = sub;
  }

  struct {
    std::int64_t d_min = 0, d_max = 0, g_min = 0, g_max = 0;
    unsigned threads = 1;
  } census_opts;
  auto* census = app.add_subcommand("census", "Classify every family in a (d,g) range");
  census->add_option("--d-min", census_opts.d_min)->required();
  census->add_option("--d-max", census_opts.d_max)->required();
  census->add_option("--g-min", census_opts.g_min)->required();
  census->add_option("--g-max", census_opts.g_max)->required();
  census->add_option("--threads", census_opts.threads)->check(CLI::PositiveNumber)
      ->capture_default_str();

  int gen_k = 0;
  std::string gen_dprime;
  auto* gen = app.add_subcommand("gen-obstructed",
                                 "Obstructed class built from k and a nef class on the blow-down");
  gen->add_option("--k", gen_k, "Intersection with the contracted line, 0..2")->required();
  gen->add_option("--dprime", gen_dprime, "Nef class \"a;b1,b2,b3,b4,b5\"")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the worked examples and acceptance checks");

  std::optional<std::string> oracle_class;
  std::uint64_t oracle_seed = 1;
  auto* oracle_cmd = app.add_subcommand("oracle", "Interpolation h0 for debugging");
  oracle_cmd->group("");
  oracle_cmd->add_option("CLASS", oracle_class);
  oracle_cmd->add_option("--seed", oracle_seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  for (auto const& [name, sub] : class_apps) {
    if (!sub->parsed()) continue;
    auto const command = class_command(name);
    std::vector<Json> payloads;
    for (auto const& text : class_inputs(class_args[name], opts.batch, in))
      payloads.push_back(command(parse_class<Integer>(text)));
    emit(render(payloads, opts.format, opts.batch), opts, out);
    return kOk;
  }

  if (census->parsed()) {
    auto const result = census_range(census_opts.d_min, census_opts.d_max, census_opts.g_min,
                                     census_opts.g_max, census_opts.threads);
    emit(census_text(result, opts.format), opts, out);
    return kOk;
  }

  if (gen->parsed()) {
    auto const dprime = BlownDownClass::parse(gen_dprime);
    auto const c = gen_obstructed(gen_k, dprime);
    auto const inv = invariants(c);
    Json payload = {{"k", gen_k},
                    {"dprime", dprime.str()},
                    {"class", to_string(c)},
                    {"degree", report::integer(inv.degree)},
                    {"genus", report::integer(inv.genus)}};
    Json const v = report::verdict(classify(c));
    for (auto const& [k, x] : v.items()) payload[k] = x;
    emit(render({payload}, opts.format, false), opts, out);
    return kOk;
  }

  if (verify->parsed()) {
    auto const rows = acceptance::worked_examples();
    auto const checks = acceptance::run_criteria();
    bool passed = std::none_of(rows.begin(), rows.end(), [](auto const& r) {
      return r.status == acceptance::Status::Fail;
    });
    passed = passed && std::none_of(checks.begin(), checks.end(),
                                    [](auto const& c) { return c.failed(); });
    emit(verify_text(rows, checks, passed, opts.format), opts, out);
    return passed ? kOk : kInternal;
  }

  if (oracle_cmd->parsed()) {
    std::vector<Json> payloads;
    for (auto const& text : class_inputs(oracle_class, opts.batch, in)) {
      auto const d = parse_class<Integer>(text);
      payloads.push_back({{"class", to_string(d)},
                          {"seed", oracle_seed},
                          {"h0_interpolation", report::integer(oracle::h0_interpolation(d, oracle_seed))},
                          {"h0", report::integer(h0(d))}});
    }
    emit(render(payloads, opts.format, opts.batch), opts, out);
    return kOk;
  }
  return kUsage;
}

}  // namespace

int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, in, out, err);
  } catch (ParseError const& e) {
    err << "error: malformed class\n" << e.annotated() << "\n";
    return kUsage;
  } catch (UsageError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (PreconditionError const& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (InternalError const& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace cubic::cli
