#include "shilov/config.hpp"

#include "shilov/errors.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace shilov {

ConfigValue ConfigValue::make_table(int line) {
  ConfigValue v;
  v.kind = Kind::Table;
  v.line = line;
  return v;
}

namespace {

struct TomlCursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("config line " + std::to_string(line) + ": " + what);
  }

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }

  void skip_inline_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos;
  }

  // whitespace, newlines and comments
  void skip_all_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
      } else if (c == '\n') {
        take();
      } else {
        break;
      }
    }
  }

  std::string bare_key() {
    skip_inline_ws();
    if (peek() == '"') return quoted_string();
    std::string out;
    while (!eof()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
        out.push_back(c);
        ++pos;
      } else
        break;
    }
    if (out.empty()) fail("expected a key");
    return out;
  }

  std::string quoted_string() {
    if (take() != '"') fail("expected '\"'");
    std::string out;
    while (!eof()) {
      char c = take();
      if (c == '"') return out;
      if (c == '\n') fail("unterminated string");
      if (c == '\\') {
        if (eof()) fail("unterminated escape");
        char e = take();
        switch (e) {
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          default: fail("unsupported escape");
        }
      } else {
        out.push_back(c);
      }
    }
    fail("unterminated string");
  }

  ConfigValue value() {
    skip_all_ws();
    ConfigValue v;
    v.line = line;
    char c = peek();
    if (c == '"') {
      v.kind = ConfigValue::Kind::Str;
      v.str = quoted_string();
      return v;
    }
    if (c == '[') {
      take();
      v.kind = ConfigValue::Kind::Array;
      skip_all_ws();
      if (peek() == ']') {
        take();
        return v;
      }
      while (true) {
        v.array.push_back(value());
        skip_all_ws();
        if (peek() == ',') {
          take();
          skip_all_ws();
          if (peek() == ']') {  // trailing comma
            take();
            return v;
          }
          continue;
        }
        if (peek() == ']') {
          take();
          return v;
        }
        fail("expected ',' or ']' in array");
      }
    }
    if (c == '{') {
      take();
      v.kind = ConfigValue::Kind::Table;
      skip_inline_ws();
      if (peek() == '}') {
        take();
        return v;
      }
      while (true) {
        std::string key = bare_key();
        skip_inline_ws();
        if (peek() != '=') fail("expected '=' in inline table");
        take();
        v.table[key] = value();
        skip_inline_ws();
        if (peek() == ',') {
          take();
          skip_inline_ws();
          continue;
        }
        if (peek() == '}') {
          take();
          return v;
        }
        fail("expected ',' or '}' in inline table");
      }
    }
    // bare token: bool or number
    std::string token;
    while (!eof()) {
      char t = peek();
      if (t == ',' || t == ']' || t == '}' || t == '#' || t == '\n' || t == ' ' || t == '\t' ||
          t == '\r')
        break;
      token.push_back(t);
      ++pos;
    }
    if (token == "true" || token == "false") {
      v.kind = ConfigValue::Kind::Bool;
      v.boolean = token == "true";
      return v;
    }
    auto r = rat_parse(token);
    if (!r) fail("cannot read value '" + token + "'");
    v.kind = ConfigValue::Kind::Num;
    v.num = *r;
    return v;
  }
};

ConfigValue* descend(ConfigValue& root, const std::vector<std::string>& path, int line) {
  ConfigValue* cur = &root;
  for (const auto& part : path) {
    if (cur->kind == ConfigValue::Kind::Array) {
      if (cur->array.empty()) throw ValidationError("config: internal path error");
      cur = &cur->array.back();
    }
    if (cur->kind != ConfigValue::Kind::Table)
      throw ValidationError("config line " + std::to_string(line) + ": '" + part +
                            "' is not a table");
    auto [it, inserted] = cur->table.emplace(part, ConfigValue::make_table(line));
    cur = &it->second;
  }
  if (cur->kind == ConfigValue::Kind::Array) cur = &cur->array.back();
  return cur;
}

}  // namespace

ConfigValue toml_parse(const std::string& text) {
  TomlCursor cur{text};
  ConfigValue root = ConfigValue::make_table(1);
  ConfigValue* active = &root;

  while (true) {
    cur.skip_all_ws();
    if (cur.eof()) break;
    if (cur.peek() == '[') {
      cur.take();
      bool array_of_tables = cur.peek() == '[';
      if (array_of_tables) cur.take();
      std::vector<std::string> path;
      while (true) {
        path.push_back(cur.bare_key());
        cur.skip_inline_ws();
        if (cur.peek() == '.') {
          cur.take();
          continue;
        }
        break;
      }
      if (cur.peek() != ']') cur.fail("expected ']' in table header");
      cur.take();
      if (array_of_tables) {
        if (cur.peek() != ']') cur.fail("expected ']]' in array-of-tables header");
        cur.take();
      }
      if (path.empty()) cur.fail("empty table header");

      std::vector<std::string> prefix(path.begin(), path.end() - 1);
      ConfigValue* parent = descend(root, prefix, cur.line);
      const std::string& name = path.back();
      if (array_of_tables) {
        auto [it, inserted] = parent->table.emplace(name, ConfigValue());
        if (inserted) {
          it->second.kind = ConfigValue::Kind::Array;
          it->second.line = cur.line;
        }
        if (it->second.kind != ConfigValue::Kind::Array)
          cur.fail("'" + name + "' is already a non-array value");
        it->second.array.push_back(ConfigValue::make_table(cur.line));
        active = &it->second.array.back();
      } else {
        auto [it, inserted] = parent->table.emplace(name, ConfigValue::make_table(cur.line));
        if (it->second.kind != ConfigValue::Kind::Table)
          cur.fail("'" + name + "' is already a non-table value");
        active = &it->second;
      }
      continue;
    }
    // key = value
    std::string key = cur.bare_key();
    cur.skip_inline_ws();
    if (cur.peek() != '=') cur.fail("expected '=' after key '" + key + "'");
    cur.take();
    if (active->table.count(key)) cur.fail("duplicate key '" + key + "'");
    active->table[key] = cur.value();
    cur.skip_inline_ws();
    if (!cur.eof() && cur.peek() != '\n' && cur.peek() != '#')
      cur.fail("unexpected trailing content after value of '" + key + "'");
  }
  return root;
}

namespace {

ConfigValue from_json(const nlohmann::json& j) {
  ConfigValue v;
  if (j.is_object()) {
    v.kind = ConfigValue::Kind::Table;
    for (auto it = j.begin(); it != j.end(); ++it) v.table[it.key()] = from_json(it.value());
  } else if (j.is_array()) {
    v.kind = ConfigValue::Kind::Array;
    for (const auto& e : j) v.array.push_back(from_json(e));
  } else if (j.is_string()) {
    v.kind = ConfigValue::Kind::Str;
    v.str = j.get<std::string>();
  } else if (j.is_boolean()) {
    v.kind = ConfigValue::Kind::Bool;
    v.boolean = j.get<bool>();
  } else if (j.is_number_integer()) {
    v.kind = ConfigValue::Kind::Num;
    v.num = Rat(j.get<std::int64_t>());
  } else if (j.is_number_unsigned()) {
    v.kind = ConfigValue::Kind::Num;
    v.num = Rat(static_cast<std::int64_t>(j.get<std::uint64_t>()));
  } else if (j.is_number_float()) {
    v.kind = ConfigValue::Kind::Num;
    v.num = rat_from_double(j.get<double>());
  } else {
    throw ValidationError("config: unsupported JSON value (null)");
  }
  return v;
}

[[noreturn]] void fail_at(const ConfigValue& v, const std::string& what) {
  throw ValidationError("config line " + std::to_string(v.line) + ": " + what);
}

Rat as_rat(const ConfigValue& v, const std::string& what) {
  if (v.kind == ConfigValue::Kind::Num) return v.num;
  if (v.kind == ConfigValue::Kind::Str) {
    auto r = rat_parse(v.str);
    if (r) return *r;
  }
  fail_at(v, what + " must be a rational (number or \"p/q\" string)");
}

int as_int(const ConfigValue& v, const std::string& what) {
  Rat r = as_rat(v, what);
  if (rat_den(r) != 1) fail_at(v, what + " must be an integer");
  return static_cast<int>(BigInt(rat_num(r)));
}

MetricSpec metric_from_value(const ConfigValue& m) {
  if (m.kind != ConfigValue::Kind::Table) fail_at(m, "metric must be a table");
  auto d_it = m.table.find("d");
  if (d_it == m.table.end()) fail_at(m, "metric needs 'd'");
  int d = as_int(d_it->second, "d");
  auto pts_it = m.table.find("points");
  if (pts_it == m.table.end() || pts_it->second.kind != ConfigValue::Kind::Array)
    fail_at(m, "metric needs a 'points' array");
  if (pts_it->second.array.empty()) fail_at(pts_it->second, "metric needs at least one point");
  std::vector<MonomialPoint> points;
  for (const auto& p : pts_it->second.array) {
    if (p.kind != ConfigValue::Kind::Table) fail_at(p, "each point must be a table");
    MonomialPoint z;
    auto w_it = p.table.find("w");
    if (w_it == p.table.end() || w_it->second.kind != ConfigValue::Kind::Array)
      fail_at(p, "point needs a 'w' array");
    for (const auto& x : w_it->second.array) z.w.push_back(as_rat(x, "weight entry"));
    auto c_it = p.table.find("c");
    z.c = c_it == p.table.end() ? Rat(0) : as_rat(c_it->second, "c");
    points.push_back(std::move(z));
  }
  try {
    return MetricSpec(d, std::move(points));
  } catch (const ValidationError& e) {
    fail_at(m, e.what());
  }
}

}  // namespace

ConfigValue json_to_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  return from_json(j);
}

ExperimentConfig config_from_value(const ConfigValue& root) {
  if (root.kind != ConfigValue::Kind::Table) throw ValidationError("config: top level must be a table");
  ExperimentConfig cfg;

  if (auto it = root.table.find("metric"); it != root.table.end())
    cfg.metric = metric_from_value(it->second);
  if (auto it = root.table.find("metric2"); it != root.table.end())
    cfg.metric2 = metric_from_value(it->second);

  if (auto it = root.table.find("sections"); it != root.table.end()) {
    if (it->second.kind != ConfigValue::Kind::Table) fail_at(it->second, "sections must be a table");
    for (const auto& [name, v] : it->second.table) {
      if (v.kind != ConfigValue::Kind::Str) fail_at(v, "section '" + name + "' must be a string");
      cfg.sections[name] = v.str;
    }
  }

  if (auto it = root.table.find("solve"); it != root.table.end()) {
    if (it->second.kind != ConfigValue::Kind::Table) fail_at(it->second, "solve must be a table");
    if (auto t = it->second.table.find("target"); t != it->second.table.end()) {
      if (t->second.kind != ConfigValue::Kind::Array) fail_at(t->second, "target must be an array");
      std::vector<Rat> target;
      for (const auto& x : t->second.array) target.push_back(as_rat(x, "target entry"));
      cfg.target = std::move(target);
    }
  }

  if (auto it = root.table.find("shilov"); it != root.table.end()) {
    if (it->second.kind != ConfigValue::Kind::Table) fail_at(it->second, "shilov must be a table");
    if (auto s = it->second.table.find("separate"); s != it->second.table.end()) {
      if (s->second.kind != ConfigValue::Kind::Array) fail_at(s->second, "separate must be an array");
      for (const auto& sub : s->second.array) {
        if (sub.kind != ConfigValue::Kind::Array) fail_at(sub, "each J-subset must be an array");
        std::vector<std::size_t> idx;
        for (const auto& x : sub.array) idx.push_back(static_cast<std::size_t>(as_int(x, "index")));
        cfg.separate.push_back(std::move(idx));
      }
    }
  }

  if (auto it = root.table.find("params"); it != root.table.end()) {
    if (it->second.kind != ConfigValue::Kind::Table) fail_at(it->second, "params must be a table");
    const auto& t = it->second.table;
    if (auto p = t.find("nmax"); p != t.end()) cfg.nmax = as_int(p->second, "nmax");
    if (auto p = t.find("tol"); p != t.end()) cfg.tol = as_rat(p->second, "tol");
    if (auto p = t.find("prec"); p != t.end()) cfg.prec = as_rat(p->second, "prec");
    if (auto p = t.find("prec_doublings"); p != t.end())
      cfg.prec_doublings = as_int(p->second, "prec_doublings");
    if (auto p = t.find("threads"); p != t.end()) cfg.threads = as_int(p->second, "threads");
    if (auto p = t.find("counting_level"); p != t.end())
      cfg.counting_level = as_int(p->second, "counting_level");
    if (auto p = t.find("seed"); p != t.end())
      cfg.seed = static_cast<std::uint64_t>(as_int(p->second, "seed"));
  }
  return cfg;
}

ExperimentConfig config_from_toml(const std::string& text) {
  return config_from_value(toml_parse(text));
}

ExperimentConfig config_from_json(const std::string& text) {
  return config_from_value(json_to_config(text));
}

ExperimentConfig config_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return config_from_json(buf.str());
  return config_from_toml(buf.str());
}

std::string metric_to_toml(const MetricSpec& spec) {
  std::string out = "[metric]\nd = " + std::to_string(spec.dim_projective()) + "\npoints = [\n";
  for (const auto& z : spec.points()) {
    out += "  { w = [";
    for (std::size_t i = 0; i < z.w.size(); ++i) {
      if (i) out += ", ";
      out += '"' + rat_str(z.w[i]) + '"';
    }
    out += "], c = \"" + rat_str(z.c) + "\" },\n";
  }
  out += "]\n";
  return out;
}

std::string metric_to_json(const MetricSpec& spec) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& z : spec.points()) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : z.w) w.push_back(rat_str(x));
    points.push_back({{"w", w}, {"c", rat_str(z.c)}});
  }
  nlohmann::json j = {{"metric", {{"d", spec.dim_projective()}, {"points", points}}}};
  return j.dump(2);
}

}  // namespace shilov
