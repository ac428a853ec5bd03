#include "waring/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "waring/errors.hpp"

namespace waring::io {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + msg);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(key, "missing");
  return *it;
}

std::int64_t as_integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) field_error(field, "expected an integer, got " + std::string(v.type_name()));
  return v.get<std::int64_t>();
}

std::uint64_t as_unsigned(const json& v, const std::string& field) {
  std::int64_t x = as_integer(v, field);
  if (x < 0) field_error(field, "must be nonnegative");
  return static_cast<std::uint64_t>(x);
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<std::int64_t> centered(const PrimeContext& ctx, const Vector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(ctx.centered(x));
  return out;
}

json certificate_json(const Certificate& c, const PrimeContext& ctx) {
  json ev = json::array();
  for (const auto& e : c.evidence) ev.push_back({{"label", e.label}, {"value", e.value}});
  json out = {{"criterion", c.criterion}, {"verdict", c.verdict_string()}, {"evidence", ev}};
  if (c.witness) {
    const auto& w = *c.witness;
    out["witness"] = {{"parameters", centered(ctx, w.parameters)},
                      {"quintic_dim", w.quintic_dim},
                      {"octic_dim", w.octic_dim},
                      {"sum_dim", w.sum_dim},
                      {"orthogonal", w.orthogonal},
                      {"passed", w.passed()}};
  }
  return out;
}

}  // namespace

Instance InstanceFile::to_instance() const {
  PrimeContext ctx(prime);
  if (points.empty()) throw Error(ErrorCode::DimensionMismatch, "empty point list");
  PointSet a = PointSet::from_integers(ctx, n, points);
  Vector l;
  for (auto v : lambda) l.push_back(ctx.reduce(v));
  return Instance(std::move(a), degree, std::move(l));
}

InstanceFile InstanceFile::from_instance(const Instance& inst) {
  const PrimeContext& ctx = inst.context();
  InstanceFile f;
  f.prime = ctx.prime();
  f.n = inst.points.n();
  f.degree = inst.degree;
  for (const auto& p : inst.points.points()) f.points.push_back(centered(ctx, p));
  f.lambda = centered(ctx, inst.lambda);
  return f;
}

InstanceFile InstanceFile::from_generated(const gen::GeneratedInstance& g) {
  InstanceFile f = from_instance(g.instance);
  f.seed = g.seed;
  f.ground_truth = gen::to_string(g.ground_truth);
  return f;
}

std::uint64_t default_prime() {
  const char* env = std::getenv("WARING_PRIME");
  if (!env || !*env) return kDefaultPrime;
  char* end = nullptr;
  const unsigned long long p = std::strtoull(env, &end, 10);
  if (*end != '\0' || !is_prime(p) || p < 3 || p >= (1ull << 31))
    throw Error(ErrorCode::NotPrime, std::string("WARING_PRIME=") + env + " is not a usable prime");
  return p;
}

InstanceFile parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte ? e.byte - 1 : 0);
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");

  InstanceFile f;
  if (auto it = doc.find("prime"); it != doc.end())
    f.prime = as_unsigned(*it, "prime");
  else
    f.prime = default_prime();
  f.n = as_unsigned(require(doc, "n"), "n");
  f.degree = as_unsigned(require(doc, "degree"), "degree");
  if (f.n < 1) field_error("n", "must be at least 1");

  const json& pts = require(doc, "points");
  if (!pts.is_array()) field_error("points", "expected an array");
  if (pts.empty()) field_error("points", "empty point list");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string name = "points[" + std::to_string(i) + "]";
    if (!pts[i].is_array()) field_error(name, "expected an array of coordinates");
    if (pts[i].size() != f.n + 1)
      field_error(name, "expected " + std::to_string(f.n + 1) + " coordinates, got " + std::to_string(pts[i].size()));
    std::vector<std::int64_t> p;
    for (std::size_t k = 0; k < pts[i].size(); ++k)
      p.push_back(as_integer(pts[i][k], name + "[" + std::to_string(k) + "]"));
    f.points.push_back(std::move(p));
  }

  const json& lam = require(doc, "lambda");
  if (!lam.is_array()) field_error("lambda", "expected an array");
  if (lam.size() != f.points.size())
    field_error("lambda", std::to_string(lam.size()) + " coefficients for " + std::to_string(f.points.size()) + " points");
  for (std::size_t i = 0; i < lam.size(); ++i) f.lambda.push_back(as_integer(lam[i], "lambda[" + std::to_string(i) + "]"));

  if (auto it = doc.find("seed"); it != doc.end()) f.seed = as_unsigned(*it, "seed");
  if (auto it = doc.find("ground_truth"); it != doc.end()) {
    if (!it->is_string()) field_error("ground_truth", "expected a string");
    f.ground_truth = it->get<std::string>();
    if (!gen::ground_truth_from_string(*f.ground_truth)) field_error("ground_truth", "unknown value");
  }
  if (!is_prime(f.prime)) field_error("prime", std::to_string(f.prime) + " is not prime");

  // canonical form: residues centered in (-p/2, p/2]
  PrimeContext ctx(f.prime);
  for (auto& p : f.points)
    for (auto& c : p) c = ctx.centered(ctx.reduce(c));
  for (auto& c : f.lambda) c = ctx.centered(ctx.reduce(c));
  return f;
}

std::string serialize_instance(const InstanceFile& f) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"prime\": " << f.prime << ",\n";
  os << "  \"n\": " << f.n << ",\n";
  os << "  \"degree\": " << f.degree << ",\n";
  os << "  \"points\": [\n";
  for (std::size_t i = 0; i < f.points.size(); ++i)
    os << "    [" << join_ints(f.points[i]) << "]" << (i + 1 < f.points.size() ? "," : "") << "\n";
  os << "  ],\n";
  os << "  \"lambda\": [" << join_ints(f.lambda) << "]";
  if (f.seed) os << ",\n  \"seed\": " << *f.seed;
  if (f.ground_truth) os << ",\n  \"ground_truth\": " << json(*f.ground_truth).dump();
  os << "\n}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

InstanceFile load_instance(const std::string& path) { return parse_instance(read_file(path)); }

void save_instance(const std::string& path, const InstanceFile& f) { write_file(path, serialize_instance(f)); }

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string render_report(const ReportFile& r, bool include_timings) {
  const PrimeContext ctx(r.prime);
  json certs = json::array();
  for (const auto& c : r.result.certificates) certs.push_back(certificate_json(c, ctx));
  json doc = {{"tool", kToolName},
              {"version", kToolVersion},
              {"input_digest", r.input_digest},
              {"mode", r.mode},
              {"criteria", r.criteria},
              {"verdict", r.result.overall.verdict_string()},
              {"decided_by", r.result.overall.criterion},
              {"exit_code", r.result.exit_code()},
              {"certificates", certs}};
  doc["report_digest"] = sha256_hex(doc.dump());
  if (include_timings) {
    json t = json::array();
    for (const auto& s : r.result.timings) t.push_back({{"stage", s.stage}, {"seconds", s.seconds}});
    doc["timings"] = t;
  }
  return doc.dump(2) + "\n";
}

std::string format_poly(const GradedPoly& f) {
  const PrimeContext& ctx = f.context();
  std::string s;
  for (std::size_t i = 0; i < f.basis().size(); ++i) {
    std::int64_t c = ctx.centered(f.coeff(i));
    if (c == 0) continue;
    std::string mono;
    auto e = f.basis().exponent(i);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mono.empty())
      s += std::to_string(mag);
    else if (mag != 1)
      s += std::to_string(mag) + "*" + mono;
    else
      s += mono;
  }
  return s.empty() ? "0" : s;
}

std::string format_hilbert_table(const HilbertProfile& prof) {
  std::vector<std::string> j, h, dh;
  for (std::size_t i = 0; i < prof.values.size(); ++i) {
    j.push_back(std::to_string(i));
    h.push_back(std::to_string(prof.values[i]));
    dh.push_back(std::to_string(prof.differences[i]));
  }
  std::size_t w = 1;
  for (const auto* row : {&j, &h, &dh})
    for (const auto& s : *row) w = std::max(w, s.size());
  std::ostringstream os;
  auto emit = [&](const char* label, const std::vector<std::string>& row) {
    os << std::left << std::setw(4) << label;
    for (const auto& s : row) os << ' ' << std::right << std::setw(static_cast<int>(w)) << s;
    os << '\n';
  };
  emit("j", j);
  emit("h", h);
  emit("Dh", dh);
  return os.str();
}

std::string format_matrix(const DenseMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) os << (k ? " " : "") << std::setw(6) << m.context().centered(m(i, k));
    os << '\n';
  }
  return os.str();
}

}  // namespace waring::io
