#include "rudin/io/json_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "rudin/error.hpp"

namespace rudin::io {

namespace {

// Walks well-formed JSON text and records the line of one JSON pointer.
class PointerLocator {
 public:
  PointerLocator(std::string_view text, std::string_view target) : text_(text), target_(target) {}

  int run() {
    value("");
    return found_.value_or(0);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  std::string string_token() {
    std::string out;
    ++pos_;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') ++pos_;
      if (pos_ < text_.size()) out.push_back(text_[pos_++]);
    }
    ++pos_;
    return out;
  }

  void value(const std::string& path) {
    skip_ws();
    if (!found_ && path == target_) found_ = line_;
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '}') {
        ++pos_;
        return;
      }
      while (pos_ < text_.size()) {
        skip_ws();
        const std::string key = string_token();
        skip_ws();
        ++pos_;  // ':'
        value(path + "/" + key);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_++] == '}') return;
      }
    } else if (c == '[') {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ']') {
        ++pos_;
        return;
      }
      for (std::size_t index = 0; pos_ < text_.size(); ++index) {
        value(path + "/" + std::to_string(index));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_++] == ']') return;
      }
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '}' && text_[pos_] != ']' &&
             !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    }
  }

  std::string_view text_;
  std::string target_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::optional<int> found_;
};

class FamilyReader {
 public:
  explicit FamilyReader(std::string_view text) : text_(text) {}

  RudinFamily read() {
    try {
      doc_ = json::parse(text_);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_at_byte(e.byte)) + ": " + e.what());
    }
    if (!doc_.is_object()) fail("", "top level must be an object");

    const int k_min = integer("/window/kMin");
    const int k_max = integer("/window/kMax");
    if (k_min > k_max) fail("/window", "kMin > kMax");
    const auto width = static_cast<std::size_t>(k_max - k_min + 1);

    const json& vars = at("/variables");
    if (!vars.is_array() || vars.empty()) fail("/variables", "expected a nonempty array");
    const int n = integer("/n");
    if (n != static_cast<int>(vars.size())) {
      fail("/n", "n = " + std::to_string(n) + " but " + std::to_string(vars.size()) + " variables are listed");
    }

    std::vector<VariableSpec> variables;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const std::string vp = "/variables/" + std::to_string(i);
      VariableSpec spec;
      if (const json& v = at(vp); v.contains("monotone")) {
        const json& m = at(vp + "/monotone");
        if (m == "increasing") {
          spec.monotone = Monotonicity::Increasing;
        } else if (m == "decreasing") {
          spec.monotone = Monotonicity::Decreasing;
        } else if (m == "none") {
          spec.monotone = Monotonicity::None;
        } else {
          fail(vp + "/monotone", "expected \"increasing\", \"decreasing\" or \"none\"");
        }
      }
      const json& primes = at(vp + "/primes");
      if (!primes.is_array()) fail(vp + "/primes", "expected an array");
      for (std::size_t p = 0; p < primes.size(); ++p) {
        const std::string pp = vp + "/primes/" + std::to_string(p);
        const DiscPoint point = disc_point(pp);
        for (const auto& existing : spec.primes) {
          if (existing.prime == point) fail(pp, "prime repeated within variable " + std::to_string(i + 1));
        }
        const int left = count(pp + "/profile/leftTail");
        const int right = count(pp + "/profile/rightTail");
        const json& w = at(pp + "/profile/window");
        if (!w.is_array() || w.size() != width) {
          fail(pp + "/profile/window", "expected an array of " + std::to_string(width) + " entries");
        }
        std::vector<int> window;
        for (std::size_t k = 0; k < w.size(); ++k) window.push_back(count(pp + "/profile/window/" + std::to_string(k)));
        spec.primes.push_back({point, MultiplicityProfile(left, std::move(window), right)});
      }
      variables.push_back(std::move(spec));
    }
    bool truncated = false;
    if (doc_.contains("truncated")) {
      const json& t = at("/truncated");
      if (!t.is_boolean()) fail("/truncated", "expected a boolean");
      truncated = t.get<bool>();
    }
    return RudinFamily(k_min, k_max, std::move(variables), truncated);
  }

 private:
  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    int line = 0;
    // Anchor missing members at their closest existing ancestor.
    for (std::string p = pointer;; p = p.substr(0, p.rfind('/'))) {
      if (doc_.contains(json::json_pointer(p)) && (line = line_of(text_, p)) > 0) break;
      if (p.empty()) break;
    }
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": " + (pointer.empty() ? "/" : pointer) + ": " + message);
  }

  const json& at(const std::string& pointer) const {
    const json::json_pointer ptr(pointer);
    if (!doc_.contains(ptr)) fail(pointer, "missing");
    return doc_.at(ptr);
  }

  int integer(const std::string& pointer) const {
    const json& v = at(pointer);
    if (!v.is_number_integer()) fail(pointer, "expected an integer");
    return v.get<int>();
  }

  int count(const std::string& pointer) const {
    const int v = integer(pointer);
    if (v < 0) fail(pointer, "expected an integer >= 0");
    return v;
  }

  double real(const std::string& pointer) const {
    const json& v = at(pointer);
    if (!v.is_number()) fail(pointer, "expected a number");
    return v.get<double>();
  }

  DiscPoint disc_point(const std::string& pointer) const {
    const double re = real(pointer + "/re");
    const double im = real(pointer + "/im");
    if (!(re * re + im * im < 1.0)) fail(pointer, "point is not inside the open unit disc");
    return DiscPoint(re, im);
  }

  int line_at_byte(std::size_t byte) const {
    int line = 1;
    for (std::size_t i = 0; i < std::min(byte, text_.size()); ++i) line += text_[i] == '\n' ? 1 : 0;
    return line;
  }

  std::string_view text_;
  json doc_;
};

json point_to_json(const DiscPoint& p) { return {{"re", p.re()}, {"im", p.im()}}; }

}  // namespace

int line_of(std::string_view text, std::string_view pointer) { return PointerLocator(text, pointer).run(); }

RudinFamily parse_family(std::string_view text) { return FamilyReader(text).read(); }

RudinFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str());
}

json family_to_json(const RudinFamily& fam) {
  json vars = json::array();
  for (const auto& v : fam.variables()) {
    json primes = json::array();
    for (const auto& e : v.primes) {
      json p = point_to_json(e.prime);
      p["profile"] = {{"leftTail", e.profile.left_tail()},
                      {"window", e.profile.window()},
                      {"rightTail", e.profile.right_tail()}};
      primes.push_back(std::move(p));
    }
    vars.push_back({{"monotone", std::string(to_string(v.monotone))}, {"primes", std::move(primes)}});
  }
  json out = {{"n", fam.n()}, {"window", {{"kMin", fam.k_min()}, {"kMax", fam.k_max()}}}, {"variables", std::move(vars)}};
  if (fam.truncated()) out["truncated"] = true;
  return out;
}

json product_to_json(const BlaschkeProduct& phi) {
  json zeros = json::array();
  for (const auto& [p, m] : phi.zeros()) zeros.push_back({{"re", p.re()}, {"im", p.im()}, {"mult", m}});
  return {{"zeros", std::move(zeros)}};
}

BlaschkeProduct product_from_json(const json& j) {
  try {
    BlaschkeProduct::ZeroMap zeros;
    for (const auto& z : j.at("zeros")) {
      const DiscPoint p(z.at("re").get<double>(), z.at("im").get<double>());
      if (!zeros.emplace(p, z.at("mult").get<int>()).second) {
        throw Error(ErrorCode::ParseError, "zero " + p.to_string() + " listed twice");
      }
    }
    return BlaschkeProduct(std::move(zeros));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json report_to_json(const CorankReport& report) {
  json tuples = json::array();
  for (const auto& t : report.per_tuple) {
    json primes = json::array();
    for (const auto& p : t.tuple.primes) primes.push_back(point_to_json(p));
    json rep = json::array();
    for (const auto& o : t.minimal_rep.tuples) rep.push_back(o.values());
    json entry = {{"primes", std::move(primes)},
                  {"zeroSet",
                   {{"leftUnbounded", t.zero_set.left_unbounded},
                    {"indices", t.zero_set.indices},
                    {"rightUnbounded", t.zero_set.right_unbounded}}},
                  {"minimalRep", std::move(rep)},
                  {"count", t.count}};
    if (t.i_set) entry["iSet"] = *t.i_set;
    tuples.push_back(std::move(entry));
  }
  return {{"method", std::string(to_string(report.method))},
          {"corank", report.overall},
          {"tuples", std::move(tuples)},
          {"truncatedWindow", report.truncated_window}};
}

}  // namespace rudin::io
