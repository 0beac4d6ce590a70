#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lemnis/numerics.hpp"

namespace lemnis {

using ojson = nlohmann::ordered_json;

// shortest round-trip decimal
inline std::string format_double(double x) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

// "re+imi"
inline std::string format_complex(Complex z) {
  std::string s = format_double(z.real());
  const double im = z.imag();
  if (std::signbit(im) && !std::isnan(im)) {
    s += "-" + format_double(-im);
  } else {
    s += "+" + format_double(im);
  }
  return s + "i";
}

namespace detail {
inline double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw domain_error("bad complex number: " + std::string(whole));
  return v;
}
}  // namespace detail

// accepts "x", "yi", "x+yi", "x-yi", "i", "-i", and the names "i", "zeta"
inline Complex parse_complex(std::string_view s) {
  const std::string_view whole = s;
  if (s == "zeta") return ZETA;
  if (s.empty()) throw domain_error("bad complex number: empty");
  if (s.back() != 'i') {
    if (s == "+" || s == "-") throw domain_error("bad complex number: " + std::string(whole));
    return detail::parse_real(s, whole);
  }
  s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, detail::parse_real(s, whole)};
  const std::string_view re = s.substr(0, split), im = s.substr(split);
  if (re.empty()) throw domain_error("bad complex number: " + std::string(whole));
  return {detail::parse_real(re, whole), detail::parse_real(im, whole)};
}

// SplitMix64; uniform doubles are built from the top 53 bits so every
// platform draws the same samples for a given seed
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

struct ResidualEntry {
  std::string name;
  double value = 0.0;
  double tol = 0.0;

  // tol = 0 marks an exact check
  bool ok() const { return std::isfinite(value) && (tol == 0.0 ? value == 0.0 : value < tol); }
};

struct Report {
  std::string command;
  ojson inputs = ojson::object();
  ojson outputs = ojson::object();
  std::vector<ResidualEntry> residuals;
  double elapsed_ms = 0.0;
  std::uint64_t seed = 0;

  // keeps the maximum per name; a NaN sticks
  void add(const std::string& name, double value, double tol) {
    for (auto& r : residuals)
      if (r.name == name) {
        if (std::isnan(value) || value > r.value) r.value = value;
        r.tol = tol;
        return;
      }
    residuals.push_back({name, value, tol});
  }

  bool pass() const {
    for (const auto& r : residuals)
      if (!r.ok()) return false;
    return true;
  }

  ojson to_json() const {
    ojson j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    ojson rs = ojson::array();
    for (const auto& r : residuals) {
      ojson e;
      e["name"] = r.name;
      if (std::isfinite(r.value))
        e["value"] = r.value;
      else
        e["value"] = format_double(r.value);
      e["tol"] = r.tol;
      rs.push_back(e);
    }
    j["residuals"] = rs;
    j["pass"] = pass();
    j["elapsed_ms"] = elapsed_ms;
    j["seed"] = seed;
    return j;
  }
};

}  // namespace lemnis
