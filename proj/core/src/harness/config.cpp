#include "nsspec/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nsspec/error.hpp"
#include "nsspec/functionals.hpp"

namespace nsspec {

using nlohmann::json;

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::VerifyLemmas:
      return "verify_lemmas";
    case ExperimentKind::Spectrum:
      return "spectrum";
    case ExperimentKind::Sweep:
      return "sweep";
    case ExperimentKind::Bgk:
      return "bgk";
    case ExperimentKind::Symbol:
      return "symbol";
  }
  return "unknown";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  if (name == "verify_lemmas" || name == "verify") return ExperimentKind::VerifyLemmas;
  if (name == "spectrum") return ExperimentKind::Spectrum;
  if (name == "sweep") return ExperimentKind::Sweep;
  if (name == "bgk") return ExperimentKind::Bgk;
  if (name == "symbol") return ExperimentKind::Symbol;
  throw ConfigError("unknown experiment kind '" + name + "'");
}

namespace {

// Reads one JSON object, remembering which keys were consumed so that
// leftovers can be reported.
class ObjectReader {
public:
  ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail("", "expected an object");
  }

  ~ObjectReader() noexcept(false) {
    if (std::uncaught_exceptions() > 0) return;
    for (const auto& item : obj_.items())
      if (!seen_.count(item.key())) fail(item.key(), "unknown key");
  }

  ObjectReader(const ObjectReader&) = delete;
  ObjectReader& operator=(const ObjectReader&) = delete;

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  void read(const std::string& key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) fail(key, "expected a number");
      out = v->get<double>();
      if (!std::isfinite(out)) fail(key, "must be finite");
    }
  }

  void read(const std::string& key, int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) fail(key, "expected an integer");
      out = v->get<int>();
    }
  }

  void read(const std::string& key, std::uint64_t& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_unsigned()) fail(key, "expected a nonnegative integer");
      out = v->get<std::uint64_t>();
    }
  }

  void read(const std::string& key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) fail(key, "expected a string");
      out = v->get<std::string>();
    }
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ConfigError("config" + path_ + (key.empty() ? "" : "." + key) + ": " + what);
  }

  std::string child(const std::string& key) const { return path_ + "." + key; }

private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

Complex read_complex(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ConfigError("config" + where + ": expected a number or [re, im]");
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

void read_profile(ObjectReader& parent, ProfileConfig& out) {
  const json* v = parent.find("profile");
  if (!v) return;
  ObjectReader r(*v, parent.child("profile"));
  r.read("p", out.p);
  r.read("tau", out.tau);
  r.read("alpha", out.alpha);
  r.read("delta", out.delta);
  r.read("nu", out.nu);
}

void read_potential(ObjectReader& parent, PotentialSpec& out) {
  const json* v = parent.find("potential");
  if (!v) return;
  ObjectReader r(*v, parent.child("potential"));
  std::string kind = to_string(out.kind);
  r.read("kind", kind);
  try {
    out.kind = potential_kind_from_string(kind);
  } catch (const DomainError& e) {
    r.fail("kind", e.what());
  }
  if (const json* amp = r.find("amplitude")) out.amplitude = read_complex(*amp, r.child("amplitude"));
  r.read("width", out.width);
  r.read("decay", out.decay);
  r.read("exponent", out.exponent);
  if (const json* table = r.find("table")) {
    if (!table->is_array()) r.fail("table", "expected an array");
    out.table.clear();
    for (const auto& item : *table) out.table.push_back(read_complex(item, r.child("table")));
  }
}

void read_model(ObjectReader& parent, ModelConfig& out) {
  const json* v = parent.find("model");
  if (!v) return;
  ObjectReader r(*v, parent.child("model"));
  std::string type = out.type == ModelType::Abstract ? "abstract" : "schrodinger";
  r.read("type", type);
  if (type == "abstract")
    out.type = ModelType::Abstract;
  else if (type == "schrodinger")
    out.type = ModelType::Schrodinger;
  else
    r.fail("type", "expected 'abstract' or 'schrodinger'");
  r.read("dim", out.dim);
  r.read("m_norm", out.m_norm);
  r.read("count", out.count);
  if (const json* a = r.find("a")) {
    if (!a->is_null()) {
      if (!a->is_number()) r.fail("a", "expected a number or null");
      out.a = a->get<double>();
    }
  }
  if (const json* g = r.find("grid")) {
    ObjectReader gr(*g, r.child("grid"));
    gr.read("d", out.grid.d);
    gr.read("n", out.grid.n);
    gr.read("h", out.grid.h);
  }
  read_potential(r, out.potential);
  if (const json* s = r.find("scales")) {
    if (!s->is_array()) r.fail("scales", "expected an array");
    out.scales.clear();
    for (const auto& x : *s) {
      if (!x.is_number()) r.fail("scales", "expected numbers");
      out.scales.push_back(x.get<double>());
    }
  }
}

void read_grids(ObjectReader& parent, GridConfig& out) {
  const json* v = parent.find("grids");
  if (!v) return;
  ObjectReader r(*v, parent.child("grids"));
  r.read("mu_points", out.mu_points);
  r.read("disk_points", out.disk_points);
  r.read("disk_radius", out.disk_radius);
}

void read_samples(ObjectReader& parent, SampleConfig& out) {
  const json* v = parent.find("samples");
  if (!v) return;
  ObjectReader r(*v, parent.child("samples"));
  r.read("sq", out.sq);
  r.read("ese2", out.ese2);
  r.read("det", out.det);
  r.read("det_pairs", out.det_pairs);
  r.read("quotient", out.quotient);
  r.read("chi", out.chi);
  r.read("kj", out.kj);
}

void read_symbol(ObjectReader& parent, SymbolConfig& out) {
  const json* v = parent.find("symbol");
  if (!v) return;
  ObjectReader r(*v, parent.child("symbol"));
  if (const json* dims = r.find("dims")) {
    if (!dims->is_array()) r.fail("dims", "expected an array");
    out.dims.clear();
    for (const auto& d : *dims) {
      if (!d.is_number_integer()) r.fail("dims", "expected integers");
      out.dims.push_back(d.get<int>());
    }
  }
  r.read("p", out.p);
  r.read("re_points", out.re_points);
  r.read("im_points", out.im_points);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("config: " + what);
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  {
    ObjectReader r(doc, "");
    std::string kind = to_string(cfg.kind);
    r.read("kind", kind);
    cfg.kind = experiment_kind_from_string(kind);
    r.read("seed", cfg.seed);
    r.read("output", cfg.output);
    read_profile(r, cfg.profile);
    read_model(r, cfg.model);
    read_grids(r, cfg.grids);
    read_samples(r, cfg.samples);
    read_symbol(r, cfg.symbol);
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void validate_config(const ExperimentConfig& cfg) {
  const auto& m = cfg.model;
  try {
    if (m.type == ModelType::Abstract) {
      make_profile(cfg.profile.p, cfg.profile.alpha, cfg.profile.delta, cfg.profile.nu,
                   cfg.profile.tau);
      require(m.dim >= 1 && static_cast<std::size_t>(m.dim) <= kMaxModelDim,
              "model.dim out of range");
      require(m.m_norm >= 0.0, "model.m_norm must be nonnegative");
      require(m.count >= 1 && m.count <= 100000, "model.count out of range");
    } else {
      validate_grid(m.grid);
      schrodinger_profile(m.grid.d, cfg.profile.p, cfg.profile.tau);
      potential_values(m.grid, m.potential);
      require(!m.scales.empty(), "model.scales must not be empty");
      for (double t : m.scales) require(std::isfinite(t) && t > 0.0, "model.scales must be positive");
    }
    if (m.a) require(*m.a > 0.0, "model.a must be positive");
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  require(cfg.grids.mu_points >= 1 && cfg.grids.disk_points >= 1, "grid sizes must be positive");
  require(cfg.grids.disk_radius > 0.0 && cfg.grids.disk_radius < 1.0,
          "grids.disk_radius must lie in (0, 1)");
  const auto& s = cfg.samples;
  require(s.sq >= 1 && s.ese2 >= 1 && s.det >= 1 && s.det_pairs >= 1 && s.quotient >= 1 &&
              s.chi >= 1 && s.kj >= 1,
          "sample counts must be positive");
  require(!cfg.symbol.dims.empty(), "symbol.dims must not be empty");
  for (int d : cfg.symbol.dims)
    require(d >= 2 && cfg.symbol.p >= 2.0 && cfg.symbol.p > 0.5 * d,
            "symbol: need d >= 2, p >= 2 and p > d/2");
  require(cfg.symbol.re_points >= 1 && cfg.symbol.im_points >= 1, "symbol grid sizes must be positive");
}

std::string canonical_json(const ExperimentConfig& cfg) {
  nlohmann::ordered_json doc;
  const auto& m = cfg.model;
  doc["kind"] = to_string(cfg.kind);
  doc["seed"] = cfg.seed;
  doc["output"] = cfg.output;
  doc["profile"] = {{"p", cfg.profile.p},
                    {"tau", cfg.profile.tau},
                    {"alpha", cfg.profile.alpha},
                    {"delta", cfg.profile.delta},
                    {"nu", cfg.profile.nu}};
  json table = json::array();
  for (const Complex& c : m.potential.table) table.push_back(complex_json(c));
  doc["model"] = {
      {"type", m.type == ModelType::Abstract ? "abstract" : "schrodinger"},
      {"dim", m.dim},
      {"m_norm", m.m_norm},
      {"count", m.count},
      {"a", m.a ? json(*m.a) : json(nullptr)},
      {"grid", {{"d", m.grid.d}, {"n", m.grid.n}, {"h", m.grid.h}}},
      {"potential",
       {{"kind", to_string(m.potential.kind)},
        {"amplitude", complex_json(m.potential.amplitude)},
        {"width", m.potential.width},
        {"decay", m.potential.decay},
        {"exponent", m.potential.exponent},
        {"table", table}}},
      {"scales", m.scales}};
  doc["grids"] = {{"mu_points", cfg.grids.mu_points},
                  {"disk_points", cfg.grids.disk_points},
                  {"disk_radius", cfg.grids.disk_radius}};
  const auto& s = cfg.samples;
  doc["samples"] = {{"sq", s.sq},         {"ese2", s.ese2},         {"det", s.det},
                    {"det_pairs", s.det_pairs}, {"quotient", s.quotient}, {"chi", s.chi},
                    {"kj", s.kj}};
  doc["symbol"] = {{"dims", cfg.symbol.dims},
                   {"p", cfg.symbol.p},
                   {"re_points", cfg.symbol.re_points},
                   {"im_points", cfg.symbol.im_points}};
  return doc.dump();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace nsspec
