#include "satake/cli/cli.hpp"

#include "satake/core/error.hpp"
#include "satake/polyhedron/coordinates.hpp"

#include "json.hpp"

namespace satake {

bool CoweightArg::integral() const {
  for (const auto& x : labels)
    if (!is_integer(x)) return false;
  return true;
}

IVec CoweightArg::int_labels() const {
  if (!integral()) throw DomainError("vector " + ambient_string(ambient) + " is not in the coweight lattice");
  IVec out;
  for (const auto& x : labels) out.push_back(to_int64(x));
  return out;
}

namespace {

std::vector<std::string> split_list(const std::string& body, const std::string& whole) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1 && parts[0].find_first_not_of(" \t") == std::string::npos)
    throw ParseError("empty vector '" + whole + "'");
  return parts;
}

RVec bracket_to_labels(const RootSystem& rs, const RVec& b) {
  // The dictionary is linear; apply it to unit vectors.
  size_t n = rs.rank();
  RVec out(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    IVec img = labels_from_bracket(rs, e);
    for (size_t j = 0; j < n; ++j) out[j] += b[i] * Rational(BigInt(img[j]));
  }
  return out;
}

}  // namespace

std::string ambient_string(const RVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

namespace {

Rational parse_entry(const std::string& entry, const std::string& raw) {
  try {
    return parse_rational(entry);
  } catch (const ParseError& e) {
    throw ParseError("in vector '" + raw + "': " + e.what());
  }
}

}  // namespace

CoweightArg parse_coweight(const RootSystem& rs, const std::string& raw) {
  size_t a = raw.find_first_not_of(" \t"), b = raw.find_last_not_of(" \t");
  if (a == std::string::npos) throw ParseError("empty vector argument");
  std::string s = raw.substr(a, b - a + 1);
  RVec vals;
  char open = s.front(), close = s.back();
  bool json_array = open == '[' && s.find('"') != std::string::npos;
  if (json_array) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception&) {
      throw ParseError("malformed JSON vector '" + raw + "'");
    }
    if (!j.is_array()) throw ParseError("malformed JSON vector '" + raw + "'");
    for (const auto& x : j) {
      if (x.is_string())
        vals.push_back(parse_entry(x.get<std::string>(), raw));
      else if (x.is_number_integer())
        vals.emplace_back(BigInt(x.get<int64_t>()));
      else
        throw ParseError("JSON vector entries must be strings or integers: '" + raw + "'");
    }
  } else if ((open == '(' && close == ')') || (open == '[' && close == ']')) {
    for (const auto& p : split_list(s.substr(1, s.size() - 2), raw)) vals.push_back(parse_entry(p, raw));
  } else {
    throw ParseError("vector '" + raw + "' must look like (x,y) or [x,y]");
  }

  CoweightArg out;
  if (open == '[' && !json_array) {
    if (vals.size() != rs.rank())
      throw ParseError("vector '" + raw + "' needs " + std::to_string(rs.rank()) + " bracket coordinates for " + rs.label());
    out.labels = bracket_to_labels(rs, vals);
    out.ambient = rs.coweight_from_labels(out.labels);
  } else {
    if (vals.size() != rs.ambient_dim())
      throw ParseError("vector '" + raw + "' needs " + std::to_string(rs.ambient_dim()) + " ambient coordinates for " + rs.label());
    out.ambient = vals;
    out.labels = rs.coweight_labels(vals);
  }
  return out;
}

}  // namespace satake
