// Command-line surface over the braidmat library. Subcommands compute
// crossing matrices of words, test and enumerate T0 masks, realize matrices
// as pure braid certificates, verify certificate files, replay the full
// n-strand realization run as CSV, and drive ladder rewriting and T-structure
// detection. Exit codes: 0 success, 1 domain error (JSON report on stderr),
// 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "braidmat/braidmat.hpp"
#include "json.hpp"

namespace {

using braidmat::Error;
using braidmat::ErrorCode;
using ordered_json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::ParseError, "cannot open output file: " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Matrix inputs are JSON files by default; --mask switches to the pair-list
// text form, which needs an explicit strand count.
braidmat::Matrix load_matrix(const std::string& path, bool as_mask, int n) {
  std::string text = read_input(path);
  if (as_mask) {
    if (n <= 0)
      throw Error(ErrorCode::InvalidParameters,
                  "--mask input needs --n to fix the strand count");
    return braidmat::mask_from_text(strip(text), n).to_matrix();
  }
  return braidmat::matrix_from_json(text);
}

std::string theorem_csv(const braidmat::TheoremReport& rep) {
  std::ostringstream out;
  out << "mask,method,word_length,nodes,micros,verified\n";
  for (const braidmat::TheoremRow& row : rep.rows)
    out << "\"" << braidmat::mask_to_text(row.mask) << "\",\"" << row.method
        << "\"," << row.word_length << "," << row.nodes << "," << row.micros
        << "," << (row.verified ? "true" : "false") << "\n";
  return out.str();
}

std::string theorem_json(const braidmat::TheoremReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["total"] = rep.total;
  j["verified"] = rep.verified_count;
  j["total_micros"] = rep.total_micros;
  j["max_micros"] = rep.max_micros;
  ordered_json rows = ordered_json::array();
  for (const braidmat::TheoremRow& row : rep.rows)
    rows.push_back(ordered_json{{"mask", braidmat::mask_to_text(row.mask)},
                                {"method", row.method},
                                {"word_length", row.word_length},
                                {"nodes", row.nodes},
                                {"micros", row.micros},
                                {"verified", row.verified}});
  j["rows"] = std::move(rows);
  return j.dump();
}

const char* search_status_name(braidmat::SearchStatus s) {
  switch (s) {
    case braidmat::SearchStatus::Found: return "found";
    case braidmat::SearchStatus::SpaceExhausted: return "space-exhausted";
    default: return "budget-exhausted";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid crossing-matrix toolkit"};
  app.require_subcommand(1);

  std::string input, out_path, format = "csv", kind = "cn", op = "eval";
  std::string trace_path;
  int n = 0;
  int workers = 1;
  uint64_t budget = 0;
  bool as_mask = false, count_only = false, diagram_input = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input file, or - for stdin")->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write output to PATH");
  };

  CLI::App* c_matrix =
      app.add_subcommand("matrix", "crossing matrices of a braid word");
  add_input(c_matrix);
  add_out(c_matrix);
  c_matrix->add_option("--n", n, "strand count")->required();
  c_matrix->add_flag("--diagram", diagram_input,
                     "input uses signed over/under tokens like +2 -3");

  CLI::App* c_t0 = app.add_subcommand("t0", "test the T0 zero condition");
  add_input(c_t0);
  add_out(c_t0);
  c_t0->add_flag("--mask", as_mask, "input is a pair list like 1-2,2-4");
  c_t0->add_option("--n", n, "strand count for --mask input");

  CLI::App* c_enum = app.add_subcommand("enumerate", "list all T0 masks");
  add_out(c_enum);
  c_enum->add_option("--n", n, "strand count")
      ->required()
      ->check(CLI::Range(1, 7));
  c_enum->add_flag("--count-only", count_only, "print only the count");
  c_enum->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* c_realize =
      app.add_subcommand("realize", "realize a matrix as a pure braid");
  add_input(c_realize);
  add_out(c_realize);
  c_realize->add_option("--kind", kind, "certificate kind")
      ->check(CLI::IsMember({"cn", "ou", "crossing"}));
  c_realize->add_flag("--mask", as_mask, "input is a pair list");
  c_realize->add_option("--n", n, "strand count for --mask input");
  c_realize->add_option("--budget", budget, "search node budget (0 = default)");

  CLI::App* c_verify =
      app.add_subcommand("verify", "re-check a certificate file");
  add_input(c_verify);
  add_out(c_verify);

  CLI::App* c_theorem = app.add_subcommand(
      "theorem6", "realize and verify every T0 matrix at a strand count");
  add_out(c_theorem);
  c_theorem->add_option("--n", n, "strand count (default 6)")
      ->check(CLI::Range(1, 7));
  c_theorem->add_option("--workers", workers, "worker threads")
      ->check(CLI::PositiveNumber);
  c_theorem->add_option("--budget", budget, "search node budget (0 = default)");
  c_theorem->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* c_ladder =
      app.add_subcommand("ladder", "evaluate or rewrite a ladder diagram");
  add_input(c_ladder);
  add_out(c_ladder);
  c_ladder->add_option("--n", n, "strand count")->required();
  c_ladder->add_option("--op", op, "eval, apply, or search")
      ->check(CLI::IsMember({"eval", "apply", "search"}));
  c_ladder->add_option("--trace", trace_path,
                       "move trace JSON file (apply only)");
  c_ladder->add_option("--budget", budget, "search node budget (0 = default)");

  CLI::App* c_tstructure =
      app.add_subcommand("tstructure", "find a T-structure on a mask");
  add_input(c_tstructure);
  add_out(c_tstructure);
  c_tstructure->add_flag("--mask", as_mask, "input is a pair list");
  c_tstructure->add_option("--n", n, "strand count for --mask input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_matrix) {
      std::string text = strip(read_input(input));
      ordered_json j;
      if (diagram_input) {
        braidmat::DiagramWord d = braidmat::parse_diagram(text, n);
        j["n"] = n;
        j["pure"] = braidmat::is_pure(braidmat::forget(d));
        j["cn"] = ordered_json::parse(
            braidmat::matrix_to_json(braidmat::cn_matrix(braidmat::forget(d))));
        j["ou"] = ordered_json::parse(
            braidmat::matrix_to_json(braidmat::ou_matrix(d)));
        j["crossing"] = ordered_json::parse(
            braidmat::matrix_to_json(braidmat::crossing_matrix(d)));
      } else {
        braidmat::ProjectionWord w = braidmat::parse_projection(text, n);
        j["n"] = n;
        j["pure"] = braidmat::is_pure(w);
        j["cn"] = ordered_json::parse(
            braidmat::matrix_to_json(braidmat::cn_matrix(w)));
      }
      write_output(out_path, j.dump());
    } else if (*c_t0) {
      braidmat::Matrix m = load_matrix(input, as_mask, n);
      int i, jj, k;
      if (braidmat::find_t0_violation(m, i, jj, k))
        throw Error(ErrorCode::NotT0,
                    "triple (" + std::to_string(i) + "," + std::to_string(jj) +
                        "," + std::to_string(k) +
                        ") violates the zero condition",
                    i, jj, k);
      write_output(out_path, "{\"t0\":true}");
    } else if (*c_enum) {
      if (count_only && format != "json") {
        write_output(out_path, std::to_string(braidmat::count_t0(n)));
      } else if (count_only) {
        ordered_json j{{"n", n}, {"count", braidmat::count_t0(n)}};
        write_output(out_path, j.dump());
      } else if (format == "json") {
        ordered_json masks = ordered_json::array();
        braidmat::enumerate_t0(n, [&masks](const braidmat::UpperMask& m) {
          masks.push_back(braidmat::mask_to_text(m));
        });
        ordered_json j{{"n", n}, {"count", masks.size()},
                       {"masks", std::move(masks)}};
        write_output(out_path, j.dump());
      } else {
        std::ostringstream lines;
        braidmat::enumerate_t0(n, [&lines](const braidmat::UpperMask& m) {
          lines << braidmat::mask_to_text(m) << "\n";
        });
        write_output(out_path, lines.str());
      }
    } else if (*c_realize) {
      braidmat::Matrix m = load_matrix(input, as_mask, n);
      braidmat::Certificate c;
      if (kind == "cn")
        c = braidmat::realize_cn(m, budget);
      else if (kind == "ou")
        c = braidmat::realize_ou(m, budget);
      else
        c = braidmat::realize_crossing(m, budget);
      braidmat::verify_certificate(c);
      if (!c.verified)
        throw Error(ErrorCode::RealizationFailed,
                    "witness failed independent verification");
      write_output(out_path, braidmat::certificate_to_json(c));
    } else if (*c_verify) {
      braidmat::Certificate c =
          braidmat::certificate_from_json(read_input(input));
      if (!braidmat::verify_certificate(c))
        throw Error(ErrorCode::RealizationFailed,
                    "certificate does not verify against its target");
      write_output(out_path, "{\"verified\":true}");
    } else if (*c_theorem) {
      if (n == 0) n = 6;
      braidmat::TheoremReport rep =
          braidmat::verify_theorem(n, workers, budget);
      write_output(out_path,
                   format == "json" ? theorem_json(rep) : theorem_csv(rep));
      if (!rep.all_verified())
        throw Error(ErrorCode::RealizationFailed,
                    std::to_string(rep.total - rep.verified_count) + " of " +
                        std::to_string(rep.total) + " matrices unrealized");
    } else if (*c_ladder) {
      braidmat::LadderDiagram d =
          braidmat::parse_ladder(strip(read_input(input)), n);
      if (op == "eval") {
        braidmat::LadderEval ev = braidmat::eval(d);
        ordered_json j;
        j["perm"] = ev.perm;
        j["counts"] = ordered_json::parse(braidmat::matrix_to_json(ev.counts));
        write_output(out_path, j.dump());
      } else if (op == "apply") {
        if (trace_path.empty())
          throw Error(ErrorCode::InvalidParameters,
                      "--op apply needs --trace FILE");
        braidmat::MoveTrace trace =
            braidmat::trace_from_json(read_input(trace_path));
        for (const braidmat::Move& mv : trace) d = braidmat::apply_move(d, mv);
        ordered_json j;
        j["ladder"] = braidmat::format_ladder(d);
        j["perm"] = braidmat::eval(d).perm;
        write_output(out_path, j.dump());
      } else {
        braidmat::SearchResult sr = braidmat::search_w_form(
            d, budget ? budget : braidmat::default_search_budget());
        ordered_json j;
        j["status"] = search_status_name(sr.status);
        j["nodes"] = sr.nodes;
        if (sr.status == braidmat::SearchStatus::Found) {
          j["ladder"] = braidmat::format_ladder(sr.w_ladder);
          j["trace"] = ordered_json::parse(braidmat::trace_to_json(sr.trace));
        }
        write_output(out_path, j.dump());
        if (sr.status != braidmat::SearchStatus::Found)
          throw Error(ErrorCode::RealizationFailed,
                      std::string("search ended without a white form: ") +
                          search_status_name(sr.status));
      }
    } else if (*c_tstructure) {
      braidmat::Matrix m = load_matrix(input, as_mask, n);
      braidmat::UpperMask mask = braidmat::m02(m);
      auto g = braidmat::find_t_structure(mask);
      if (!g)
        throw Error(ErrorCode::RealizationFailed,
                    "mask admits no T-structure");
      braidmat::TStructureReport rep = braidmat::check_t_structure(*g);
      if (!rep.ok())
        throw Error(ErrorCode::RealizationFailed,
                    "internal check failed: " + rep.witness);
      write_output(out_path, braidmat::graph_to_json(*g));
    }
  } catch (const Error& e) {
    std::cerr << braidmat::error_to_json(e) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Error wrapped(ErrorCode::InvalidParameters, e.what());
    std::cerr << braidmat::error_to_json(wrapped) << "\n";
    return 1;
  }
  return 0;
}
