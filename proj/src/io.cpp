#include "braidmat/io.hpp"

#include <sstream>

#include "json.hpp"

namespace braidmat {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_or_throw(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::ParseError, "malformed JSON");
  return j;
}

ordered_json matrix_node(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 1; i <= m.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 1; j <= m.n(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"n", m.n()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_node(const ordered_json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries") ||
      !j["n"].is_number_integer() || !j["entries"].is_array())
    throw Error(ErrorCode::ParseError,
                "matrix JSON needs integer \"n\" and array \"entries\"");
  const int n = j["n"].get<int>();
  Matrix m(n);
  const auto& rows = j["entries"];
  if (static_cast<int>(rows.size()) != n)
    throw Error(ErrorCode::ParseError, "matrix entries must have n rows");
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[i - 1];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::ParseError, "matrix rows must have n columns");
    for (int jj = 1; jj <= n; ++jj) {
      if (!row[jj - 1].is_number_integer())
        throw Error(ErrorCode::ParseError, "matrix entries must be integers");
      m.at(i, jj) = row[jj - 1].get<int>();
    }
  }
  return m;
}

const char* dir_name(bool forward) { return forward ? "fwd" : "bwd"; }

MoveId move_id_from_name(const std::string& name) {
  for (int t = 1; t <= 9; ++t) {
    MoveId id = static_cast<MoveId>(t);
    if (name == move_name(id)) return id;
  }
  throw Error(ErrorCode::ParseError, "unknown move name: " + name);
}

}  // namespace

std::string matrix_to_json(const Matrix& m) { return matrix_node(m).dump(); }

Matrix matrix_from_json(const std::string& text) {
  return matrix_from_node(parse_or_throw(text));
}

std::string mask_to_text(const UpperMask& mask) {
  std::string out;
  for (auto [i, j] : mask.pairs()) {
    if (!out.empty()) out += ",";
    out += std::to_string(i) + "-" + std::to_string(j);
  }
  return out;
}

UpperMask mask_from_text(const std::string& text, int n) {
  UpperMask mask(n);
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    size_t first = token.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    size_t last = token.find_last_not_of(" \t");
    token = token.substr(first, last - first + 1);
    size_t dash = token.find('-');
    int i = 0, j = 0;
    try {
      size_t used = 0;
      if (dash == std::string::npos) throw std::invalid_argument(token);
      i = std::stoi(token.substr(0, dash), &used);
      if (used != dash) throw std::invalid_argument(token);
      j = std::stoi(token.substr(dash + 1), &used);
      if (used != token.size() - dash - 1) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad pair token: " + token);
    }
    if (!(1 <= i && i < j && j <= n))
      throw Error(ErrorCode::ParseError,
                  "pair out of range for n=" + std::to_string(n) + ": " +
                      token);
    mask.set(i, j);
  }
  return mask;
}

std::string trace_to_json(const MoveTrace& trace) {
  ordered_json arr = ordered_json::array();
  for (const Move& m : trace)
    arr.push_back(ordered_json{{"move", move_name(m.id)},
                               {"index", m.index},
                               {"dir", dir_name(m.forward)}});
  return arr.dump();
}

MoveTrace trace_from_json(const std::string& text) {
  ordered_json arr = parse_or_throw(text);
  if (!arr.is_array())
    throw Error(ErrorCode::ParseError, "trace JSON must be an array");
  MoveTrace trace;
  for (const auto& e : arr) {
    if (!e.is_object() || !e.contains("move") || !e.contains("index") ||
        !e.contains("dir") || !e["move"].is_string() ||
        !e["index"].is_number_integer() || !e["dir"].is_string())
      throw Error(ErrorCode::ParseError,
                  "trace entries need \"move\", \"index\", \"dir\"");
    Move m;
    m.id = move_id_from_name(e["move"].get<std::string>());
    m.index = e["index"].get<int>();
    const std::string dir = e["dir"].get<std::string>();
    if (dir != "fwd" && dir != "bwd")
      throw Error(ErrorCode::ParseError, "dir must be fwd or bwd: " + dir);
    m.forward = dir == "fwd";
    trace.push_back(m);
  }
  return trace;
}

std::string certificate_to_json(const Certificate& c) {
  ordered_json j;
  switch (c.kind) {
    case Certificate::Kind::CN: j["kind"] = "cn"; break;
    case Certificate::Kind::OU: j["kind"] = "ou"; break;
    case Certificate::Kind::Crossing: j["kind"] = "crossing"; break;
  }
  j["target"] = matrix_node(c.target);
  if (c.kind == Certificate::Kind::CN)
    j["word"] = format_word(c.word);
  else
    j["diagram"] = format_word(c.diagram);
  j["method"] = c.method;
  j["nodes"] = c.nodes;
  j["verified"] = c.verified;
  return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
  ordered_json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("kind") || !j.contains("target") ||
      !j["kind"].is_string())
    throw Error(ErrorCode::ParseError,
                "certificate JSON needs \"kind\" and \"target\"");
  Certificate c;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "cn")
    c.kind = Certificate::Kind::CN;
  else if (kind == "ou")
    c.kind = Certificate::Kind::OU;
  else if (kind == "crossing")
    c.kind = Certificate::Kind::Crossing;
  else
    throw Error(ErrorCode::ParseError, "unknown certificate kind: " + kind);
  c.target = matrix_from_node(j["target"]);
  if (c.kind == Certificate::Kind::CN) {
    if (!j.contains("word") || !j["word"].is_string())
      throw Error(ErrorCode::ParseError, "cn certificate needs \"word\"");
    c.word = parse_projection(j["word"].get<std::string>(), c.target.n());
  } else {
    if (!j.contains("diagram") || !j["diagram"].is_string())
      throw Error(ErrorCode::ParseError, "diagram certificate needs \"diagram\"");
    c.diagram = parse_diagram(j["diagram"].get<std::string>(), c.target.n());
  }
  if (j.contains("method") && j["method"].is_string())
    c.method = j["method"].get<std::string>();
  if (j.contains("nodes") && j["nodes"].is_number_unsigned())
    c.nodes = j["nodes"].get<uint64_t>();
  if (j.contains("verified") && j["verified"].is_boolean())
    c.verified = j["verified"].get<bool>();
  return c;
}

std::string graph_to_json(const GridGraph& g) {
  ordered_json j;
  j["n"] = g.n;
  ordered_json vs = ordered_json::array();
  for (auto [i, jj] : g.vertices) vs.push_back(ordered_json::array({i, jj}));
  j["vertices"] = std::move(vs);
  ordered_json hs = ordered_json::array();
  ordered_json ds = ordered_json::array();
  for (size_t t = 0; t < g.vertices.size(); ++t) {
    auto [i, jj] = g.vertices[t];
    if (g.left[t] >= 0) {
      auto [a, b] = g.vertices[g.left[t]];
      hs.push_back(ordered_json::array({i, jj, a, b}));
    }
    if (g.down[t] >= 0) {
      auto [a, b] = g.vertices[g.down[t]];
      ds.push_back(ordered_json::array({i, jj, a, b}));
    }
  }
  j["hedges"] = std::move(hs);
  j["vedges"] = std::move(ds);
  return j.dump();
}

std::string error_to_json(const Error& e) {
  ordered_json j;
  j["error"] = error_code_name(e.code());
  j["message"] = e.what();
  if (e.witness_i() || e.witness_j() || e.witness_k())
    j["witness"] =
        ordered_json::array({e.witness_i(), e.witness_j(), e.witness_k()});
  return j.dump();
}

}  // namespace braidmat
