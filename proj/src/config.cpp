#include "loccon/config.hpp"

#include "loccon/report_json.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

namespace loccon {

std::string ConfigError::to_string() const {
  std::string out = source;
  if (line > 0) out += ":" + std::to_string(line);
  out += ": ";
  if (!path.empty()) out += path + ": ";
  return out + message;
}

int ConfigResult::line_of(const std::string& pointer) const {
  // walk up to the nearest located ancestor
  std::string p = pointer;
  for (;;) {
    if (auto it = lines.find(p); it != lines.end()) return it->second;
    if (p.empty()) return 0;
    p.resize(p.rfind('/'));
  }
}

namespace {

std::string pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

// Records the starting line of every value in a document nlohmann has already accepted.
class LineIndex {
 public:
  LineIndex(const std::string& text, std::map<std::string, int>& out) : s_(text), out_(out) {}
  void run() { value(""); }

 private:
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      if (s_[i_] == '\n') ++line_;
      ++i_;
    }
  }
  std::string str() {
    std::string r;
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
      r += s_[i_++];
    }
    ++i_;
    return r;
  }
  void value(const std::string& ptr) {
    ws();
    if (i_ >= s_.size()) return;
    out_[ptr] = line_;
    const char c = s_[i_];
    if (c == '{' || c == '[') {
      const bool object = c == '{';
      ++i_;
      ws();
      if (s_[i_] == (object ? '}' : ']')) {
        ++i_;
        return;
      }
      for (size_t index = 0;; ++index) {
        ws();
        std::string token = std::to_string(index);
        if (object) {
          token = pointer_token(str());
          ws();
          ++i_;  // ':'
        }
        value(ptr + "/" + token);
        ws();
        if (s_[i_++] != ',') return;
      }
    }
    if (c == '"') {
      str();
      return;
    }
    while (i_ < s_.size() && !std::strchr(",]} \t\r\n", s_[i_])) ++i_;
  }

  const std::string& s_;
  std::map<std::string, int>& out_;
  size_t i_ = 0;
  int line_ = 1;
};

std::string read_file(const std::filesystem::path& file, bool& ok) {
  std::ifstream in(file, std::ios::binary);
  ok = static_cast<bool>(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::optional<Integer> parse_integer(const std::string& s) {
  const std::string t = trim(s);
  static const std::regex re("[+-]?[0-9]+");
  if (!std::regex_match(t, re)) return std::nullopt;
  return Integer(t[0] == '+' ? t.substr(1) : t);
}

class ConfigReader {
 public:
  ConfigReader(const std::string& source, ConfigResult& out) : source_(source), out_(out) {}

  void error(const std::string& ptr, const std::string& msg) {
    out_.errors.push_back({source_, ptr, out_.line_of(ptr), msg});
  }

  std::optional<Integer> integer(const Json& j, const std::string& ptr) {
    try {
      return integer_from_json(j);
    } catch (const std::invalid_argument& ex) {
      error(ptr, ex.what());
      return std::nullopt;
    }
  }

  std::optional<long> small_integer(const Json& j, const std::string& ptr, long lo) {
    auto x = integer(j, ptr);
    if (!x) return std::nullopt;
    if (!x->fits_slong_p() || x->get_si() < lo) {
      error(ptr, "expected an integer >= " + std::to_string(lo) + ", got " + x->get_str());
      return std::nullopt;
    }
    return x->get_si();
  }

  std::optional<WeierstrassCurve> curve_array(const Json& j, const std::string& ptr) {
    if (!j.is_array() || j.size() != 5) {
      error(ptr, "curve must be five integers [a1, a2, a3, a4, a6] or a label");
      return std::nullopt;
    }
    std::vector<Integer> a;
    for (size_t i = 0; i < 5; ++i) {
      auto x = integer(j[i], ptr + "/" + std::to_string(i));
      if (!x) return std::nullopt;
      a.push_back(*x);
    }
    return WeierstrassCurve{a[0], a[1], a[2], a[3], a[4]};
  }

  std::optional<WeierstrassCurve> curve_label(const std::string& label, const Json& doc,
                                              const std::filesystem::path& base_dir) {
    if (!doc.contains("curves_file") || !doc["curves_file"].is_string()) {
      error("/curve", "curve label '" + label + "' needs \"curves_file\" naming a local label,a1,a2,a3,a4,a6 file");
      return std::nullopt;
    }
    const std::filesystem::path file = base_dir / doc["curves_file"].get<std::string>();
    const CurveFile cf = load_curve_csv(file);
    for (const auto& e : cf.errors) out_.errors.push_back(e);
    for (const auto& e : cf.entries)
      if (e.label == label && e.curve) return e.curve;
    if (cf.errors.empty()) error("/curve", "label '" + label + "' not found in " + file.string());
    return std::nullopt;
  }

  std::optional<PrimeSite> site_by_label(const std::string& label, const QuadraticFieldSpec& K,
                                         const std::string& ptr) {
    static const std::regex re("v([0-9]+)('?)");
    std::smatch m;
    if (!std::regex_match(label, m, re)) {
      error(ptr, "site label '" + label + "' must look like v5 or v5'");
      return std::nullopt;
    }
    const Integer l(m[1].str());
    if (!is_prime(l)) {
      error(ptr, l.get_str() + " is not prime");
      return std::nullopt;
    }
    const auto sites = sites_above(l, K);
    if (m[2].length() == 0) return sites.front();
    if (sites.size() != 2) {
      error(ptr, l.get_str() + " is not split in K, so " + label + " names no site");
      return std::nullopt;
    }
    return sites.back();
  }

  void ramified_sites(const Json& j, TowerSpec& t) {
    const std::string base = "/ramified_sites";
    if (!j.is_array()) {
      error(base, "ramified_sites must be a list of {\"l\": prime, \"which\"?: \"first\"|\"second\"}");
      return;
    }
    for (size_t i = 0; i < j.size(); ++i) {
      const std::string ptr = base + "/" + std::to_string(i);
      const Json& item = j[i];
      std::optional<Integer> l;
      std::optional<std::string> which;
      if (item.is_object()) {
        for (const auto& [key, _] : item.items())
          if (key != "l" && key != "which") error(ptr + "/" + pointer_token(key), "unknown field");
        if (!item.contains("l")) {
          error(ptr, "missing \"l\"");
          continue;
        }
        l = integer(item["l"], ptr + "/l");
        if (item.contains("which")) {
          if (!item["which"].is_string()) error(ptr + "/which", "which must be \"first\" or \"second\"");
          else which = item["which"].get<std::string>();
        }
      } else {
        l = integer(item, ptr);
      }
      if (!l) continue;
      if (*l < 2 || !is_prime(*l)) {
        error(ptr, l->get_str() + " is not prime");
        continue;
      }
      const auto sites = sites_above(*l, t.K);
      if (!which) {
        for (const auto& s : sites) t.ramified_sites.push_back(s);
      } else if (sites.size() == 2 && (*which == "first" || *which == "second")) {
        t.ramified_sites.push_back(*which == "first" ? sites.front() : sites.back());
      } else if (sites.size() == 1 && *which == "self") {
        t.ramified_sites.push_back(sites.front());
      } else {
        error(ptr + "/which", "'" + *which + "' does not select a site above " + l->get_str() +
                                  " (" + to_string(sites.front().split_type) + " in K)");
      }
    }
  }

  void overrides(const Json& j, TowerSpec& t) {
    const std::string base = "/overrides";
    if (!j.is_object()) {
      error(base, "overrides must be an object keyed by site label");
      return;
    }
    for (const auto& [label, body] : j.items()) {
      const std::string ptr = base + "/" + pointer_token(label);
      const auto site = site_by_label(label, t.K, ptr);
      if (!site) continue;
      if (!body.is_object()) {
        error(ptr, "override entry must be an object");
        continue;
      }
      SiteOverrides ov;
      for (const auto& [key, value] : body.items()) {
        const std::string vp = ptr + "/" + pointer_token(key);
        try {
          if (key == "defect_override") ov.defect = defect_from_json(value);
          else if (key == "anomalous_override") {
            if (!value.is_boolean()) throw std::invalid_argument("anomalous_override must be true or false");
            ov.anomalous = value.get<bool>();
          } else if (key == "reduction_over_Kv_override") {
            if (!value.is_string()) throw std::invalid_argument("reduction_over_Kv_override must be a string");
            ov.reduction_over_Kv = reduction_type_from_name(value.get<std::string>());
          } else {
            error(vp, "unknown override field");
          }
        } catch (const std::invalid_argument& ex) {
          error(vp, ex.what());
        }
      }
      if (ov.defect == SemistabilityDefect::Unknown) error(ptr + "/defect_override", "\"unknown\" is not an override");
      t.overrides[*site] = ov;
    }
  }

 private:
  std::string source_;
  ConfigResult& out_;
};

}  // namespace

ConfigResult parse_config(const std::string& text, const std::filesystem::path& base_dir, ConfigMode mode,
                          const std::string& source) {
  ConfigResult out;
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    const size_t upto = std::min<size_t>(ex.byte > 0 ? ex.byte - 1 : 0, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
    std::string msg = ex.what();
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    out.errors.push_back({source, "", line, "invalid JSON: " + msg});
    return out;
  }
  LineIndex(text, out.lines).run();
  ConfigReader rd(source, out);
  if (!doc.is_object()) {
    rd.error("", "config must be a JSON object");
    return out;
  }

  static const std::set<std::string> known = {"label", "curve", "curves_file", "d", "p", "n",
                                              "ramified_sites", "dim_Sp_E_K", "overrides"};
  for (const auto& [key, _] : doc.items())
    if (!known.count(key)) rd.error("/" + pointer_token(key), "unknown field");

  AnalysisConfig cfg;
  if (doc.contains("label")) {
    if (doc["label"].is_string()) cfg.label = doc["label"].get<std::string>();
    else rd.error("/label", "label must be a string");
  }

  std::optional<WeierstrassCurve> curve;
  if (mode == ConfigMode::Analysis) {
    if (!doc.contains("curve")) {
      rd.error("", "missing \"curve\"");
    } else if (doc["curve"].is_string()) {
      const auto label = doc["curve"].get<std::string>();
      curve = rd.curve_label(label, doc, base_dir);
      if (cfg.label.empty()) cfg.label = label;
    } else {
      curve = rd.curve_array(doc["curve"], "/curve");
    }
  }

  bool tower_ok = true;
  for (const char* key : {"d", "p"}) {
    if (!doc.contains(key)) {
      rd.error("", std::string("missing \"") + key + "\"");
      tower_ok = false;
      continue;
    }
    auto x = rd.integer(doc[key], std::string("/") + key);
    if (!x) tower_ok = false;
    else if (key[0] == 'd') cfg.tower.K.d = *x;
    else cfg.tower.p = *x;
  }
  if (doc.contains("n")) {
    if (auto n = rd.small_integer(doc["n"], "/n", std::numeric_limits<int>::min()); n && *n <= 1'000'000)
      cfg.tower.n = static_cast<int>(*n);
    else if (n) rd.error("/n", "n is unreasonably large");
    else tower_ok = false;
  }
  if (doc.contains("dim_Sp_E_K")) {
    if (!doc["dim_Sp_E_K"].is_null()) {
      if (auto dim = rd.small_integer(doc["dim_Sp_E_K"], "/dim_Sp_E_K", 0)) cfg.dim_selmer_K = dim;
    }
  }
  // site selection depends on how primes split in K, so it needs a usable d
  if (tower_ok && cfg.tower.K.d != 0 && cfg.tower.K.d != 1) {
    if (doc.contains("ramified_sites")) rd.ramified_sites(doc["ramified_sites"], cfg.tower);
    if (doc.contains("overrides")) rd.overrides(doc["overrides"], cfg.tower);
  } else if (doc.contains("d") && tower_ok) {
    rd.error("/d", "d = " + cfg.tower.K.d.get_str() + " does not define a quadratic field");
  }

  if (!out.errors.empty()) return out;
  if (curve) cfg.curve = *curve;
  out.config = std::move(cfg);
  return out;
}

ConfigResult load_config(const std::filesystem::path& file, ConfigMode mode) {
  bool ok = false;
  const std::string text = read_file(file, ok);
  if (!ok) {
    ConfigResult out;
    out.errors.push_back({file.string(), "", 0, "cannot read config file"});
    return out;
  }
  return parse_config(text, file.parent_path(), mode, file.string());
}

CurveFile parse_curve_csv(const std::string& text, const std::string& source) {
  CurveFile out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool header_seen = false;
  static const std::vector<std::string> header = {"label", "a1", "a2", "a3", "a4", "a6"};
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (trim(raw).empty() || trim(raw)[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(raw);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(trim(f));
    if (!raw.empty() && raw.back() == ',') fields.push_back("");
    if (!header_seen) {
      header_seen = true;
      if (fields != header) {
        out.errors.push_back({source, "", line, "header must be label,a1,a2,a3,a4,a6"});
        return out;
      }
      continue;
    }
    CurveEntry entry;
    entry.line = line;
    entry.label = fields.empty() ? "" : fields[0];
    if (fields.size() != 6) {
      entry.error = ConfigError{source, "", line, "expected 6 fields, found " + std::to_string(fields.size())};
    } else if (entry.label.empty()) {
      entry.error = ConfigError{source, "label", line, "empty label"};
    } else {
      std::vector<Integer> a;
      for (size_t i = 1; i < 6 && !entry.error; ++i) {
        if (auto x = parse_integer(fields[i])) a.push_back(*x);
        else entry.error = ConfigError{source, header[i], line, "'" + fields[i] + "' is not an integer"};
      }
      if (!entry.error) entry.curve = WeierstrassCurve{a[0], a[1], a[2], a[3], a[4]};
    }
    out.entries.push_back(std::move(entry));
  }
  if (!header_seen) out.errors.push_back({source, "", 0, "empty curve file"});
  return out;
}

CurveFile load_curve_csv(const std::filesystem::path& file) {
  bool ok = false;
  const std::string text = read_file(file, ok);
  if (!ok) {
    CurveFile out;
    out.errors.push_back({file.string(), "", 0, "cannot read curve file"});
    return out;
  }
  return parse_curve_csv(text, file.string());
}

int violation_line(const ConfigResult& cfg, const Violation& v) {
  switch (v.rule) {
    case TowerRule::PrimeAboveThree:
      return cfg.line_of(v.message.rfind("n =", 0) == 0 ? "/n" : "/p");
    case TowerRule::SquarefreeRadicand: return cfg.line_of("/d");
    case TowerRule::NonsingularCurve: return cfg.line_of("/curve");
    case TowerRule::ConjugationClosed:
    case TowerRule::RamifiedInBothAboveP:
    case TowerRule::SiteConsistency: return cfg.line_of("/ramified_sites");
  }
  return 0;
}

}  // namespace loccon
