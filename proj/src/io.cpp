#include "ect/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ect/errors.hpp"

namespace ect::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

template <class T>
bool parse_number(std::string_view tok, T& out) {
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

// Splits into (line number, content) with comments stripped and blank lines
// dropped.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(number, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

SimplicialComplex validated(SimplicialComplex complex) {
  const auto report = validate(complex);
  if (!report.ok()) {
    throw Error(ErrorKind::Validation, "invalid complex: " + report.violations.front().message);
  }
  return complex;
}

}  // namespace

SimplicialComplex parse_off(std::string_view text) {
  const auto lines = content_lines(text);
  std::size_t at = 0;
  auto next = [&](const char* what) -> const std::pair<int, std::string_view>& {
    if (at >= lines.size()) {
      const int last = lines.empty() ? 1 : lines.back().first + 1;
      throw ParseError(last, std::string("unexpected end of file, expected ") + what);
    }
    return lines[at++];
  };

  const auto& [hline, header] = next("OFF header");
  if (header != "OFF") throw ParseError(hline, "expected OFF header");

  const auto& [cline, counts] = next("count line");
  const auto ct = tokens(counts);
  long nv = 0, nf = 0, ne = 0;
  if ((ct.size() != 2 && ct.size() != 3) || !parse_number(ct[0], nv) || !parse_number(ct[1], nf) ||
      (ct.size() == 3 && !parse_number(ct[2], ne)) || nv < 0 || nf < 0 || ne < 0) {
    throw ParseError(cline, "malformed count line, expected 'vertices faces [edges]'");
  }

  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(nv) * 3);
  for (long i = 0; i < nv; ++i) {
    const auto& [line, body] = next("vertex line");
    const auto t = tokens(body);
    double x[3];
    if (t.size() != 3 || !parse_number(t[0], x[0]) || !parse_number(t[1], x[1]) ||
        !parse_number(t[2], x[2])) {
      throw ParseError(line, "expected three vertex coordinates");
    }
    coords.insert(coords.end(), x, x + 3);
  }

  std::vector<Simplex> faces;
  for (long f = 0; f < nf; ++f) {
    const auto& [line, body] = next("face line");
    const auto t = tokens(body);
    int k = 0;
    if (t.empty() || !parse_number(t[0], k)) throw ParseError(line, "malformed face line");
    if (k != 3) throw ParseError(line, "only triangular faces are supported");
    if (t.size() != 4) throw ParseError(line, "face line must list exactly three indices");
    Simplex s(3);
    for (int i = 0; i < 3; ++i) {
      if (!parse_number(t[1 + i], s[i]) || s[i] < 0 || s[i] >= nv) {
        throw ParseError(line, "face index out of range");
      }
    }
    faces.push_back(std::move(s));
  }
  if (at != lines.size()) throw ParseError(lines[at].first, "trailing content after faces");
  return validated(SimplicialComplex::from_generators(3, std::move(coords), faces));
}

SimplicialComplex parse_complex_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("JSON: ") + e.what());
  }
  try {
    const int d = j.at("d").get<int>();
    if (d < 1) throw Error(ErrorKind::Parse, "\"d\" must be positive");
    std::vector<double> coords;
    for (const auto& row : j.at("vertices")) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
        throw Error(ErrorKind::Parse, "every vertex needs d coordinates");
      }
      for (const auto& x : row) coords.push_back(x.get<double>());
    }
    std::vector<Simplex> gens;
    for (const auto& s : j.at("simplices")) gens.push_back(s.get<Simplex>());
    const long nv = static_cast<long>(coords.size() / d);
    for (const auto& s : gens) {
      if (s.empty()) throw Error(ErrorKind::Parse, "empty simplex");
      for (int v : s) {
        if (v < 0 || v >= nv) throw Error(ErrorKind::Parse, "simplex index out of range");
      }
    }
    return validated(SimplicialComplex::from_generators(d, std::move(coords), gens));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("JSON schema: ") + e.what());
  }
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json verts = Json::array();
  for (std::size_t i = 0; i < complex.num_vertices(); ++i) {
    const auto x = complex.vertex(i);
    verts.push_back(std::vector<double>(x.begin(), x.end()));
  }
  return {{"d", complex.ambient_dim()}, {"vertices", verts}, {"simplices", complex.simplices()}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << content;
}

SimplicialComplex load_shape(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  auto ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".off" ? parse_off(text) : parse_complex_json(text);
}

Direction parse_direction(std::string_view text) {
  std::vector<double> comps;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = text.find(',', pos);
    const auto tok = trim(text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos));
    double x = 0;
    if (!parse_number(tok, x)) throw Error(ErrorKind::Parse, "bad direction component '" + std::string(tok) + "'");
    comps.push_back(x);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return Direction::normalized(comps);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string curve_to_csv(const EulerCurve& curve) {
  std::string out = "t,value\n";
  int value = 0;
  for (const auto& j : curve.jumps()) {
    value += j.delta;
    out += format_double(j.threshold) + "," + std::to_string(value) + "\n";
  }
  return out;
}

Json curve_to_json(const EulerCurve& curve) {
  Json jumps = Json::array();
  for (const auto& j : curve.jumps()) jumps.push_back({j.threshold, j.delta});
  return {{"jumps", jumps}, {"terminal", curve.terminal_value()}};
}

EulerCurve curve_from_json(const Json& j) {
  std::vector<Jump> raw;
  for (const auto& p : j.at("jumps")) raw.push_back({p.at(0).get<double>(), p.at(1).get<int>()});
  return EulerCurve::from_jumps(std::move(raw));
}

Json direction_to_json(const Direction& v) {
  return std::vector<double>(v.components().begin(), v.components().end());
}

Direction direction_from_json(const Json& j) {
  return Direction::normalized(j.get<std::vector<double>>());
}

Json diagram_to_json(const PersistenceDiagram& diagram) {
  Json out = Json::array();
  for (const auto& p : diagram.points) {
    Json death = p.death == kInfinity ? Json("inf") : Json(p.death);
    out.push_back({{"birth", p.birth}, {"death", death}, {"degree", p.degree},
                   {"multiplicity", p.multiplicity}});
  }
  return out;
}

Json net_to_json(const DirectionNet& net) {
  Json dirs = Json::array();
  for (const auto& v : net.directions) dirs.push_back(direction_to_json(v));
  return {{"d", net.dim}, {"delta", net.delta}, {"multiplicity", net.multiplicity},
          {"directions", dirs}, {"groups", net.groups}};
}

Json representatives_to_json(const std::vector<StratumRepresentative>& reps) {
  Json out = Json::array();
  for (const auto& r : reps) {
    std::vector<int> signs(r.label.signs.begin(), r.label.signs.end());
    out.push_back({{"label", signs}, {"direction", direction_to_json(r.direction)}});
  }
  return out;
}

Json report_to_json(const ReconstructionReport& report,
                    const std::vector<EctOracle::Record>& transcript) {
  Json strata = Json::array();
  for (const auto& s : report.strata) {
    std::vector<int> signs(s.label.signs.begin(), s.label.signs.end());
    strata.push_back({{"label", signs}, {"direction", direction_to_json(s.direction)},
                      {"curve", curve_to_json(s.curve)}});
  }
  Json queries = Json::array();
  for (const auto& r : transcript) {
    queries.push_back({{"direction", direction_to_json(r.direction)}, {"curve", curve_to_json(r.curve)}});
  }
  Json out = {
      {"params", {{"d", report.params.d}, {"delta", report.params.delta}, {"k_delta", report.params.k_delta}}},
      {"vertices", report.vertices},
      {"strata", strata},
      {"net_size", report.net_size},
      {"total_queries", report.total_queries},
      {"budget",
       {{"first_term", report.budget.first_term},
        {"strata_bound", report.budget.strata_bound},
        {"total", report.budget.total()},
        {"vertex_count_bound", vertex_count_bound(report.params)}}},
      {"transcript", queries},
  };
  out["held_out_max_l1"] = report.held_out_max_l1 ? Json(*report.held_out_max_l1) : Json(nullptr);
  return out;
}

std::vector<EctOracle::Record> transcript_from_json(const Json& report) {
  try {
    std::vector<EctOracle::Record> out;
    for (const auto& q : report.at("transcript")) {
      out.push_back({direction_from_json(q.at("direction")), curve_from_json(q.at("curve"))});
    }
    return out;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("transcript: ") + e.what());
  }
}

Json invariance_to_json(const InvarianceReport& report) {
  return {{"statistic", report.statistic},
          {"null_quantiles", {{"q50", report.q50}, {"q90", report.q90}, {"q95", report.q95}}},
          {"null_distances", report.null_distances},
          {"decision", report.decision()}};
}

std::string sample_summary_csv(const CurveSample& a, const CurveSample& b) {
  std::string out = "shape,index,jumps,first,last,terminal\n";
  auto rows = [&](const char* name, const CurveSample& s) {
    for (std::size_t i = 0; i < s.curves.size(); ++i) {
      const auto& c = s.curves[i];
      out += std::string(name) + "," + std::to_string(i) + "," + std::to_string(c.size()) + ",";
      out += c.empty() ? "," : format_double(c.jumps().front().threshold) + "," +
                                   format_double(c.jumps().back().threshold);
      out += "," + std::to_string(c.terminal_value()) + "\n";
    }
  };
  rows("a", a);
  rows("b", b);
  return out;
}

}  // namespace ect::io
