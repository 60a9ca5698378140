// Copyright 2026 The bohreq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bohr_cli/series_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "bohr_cli/json_util.hpp"

namespace bohr::cli {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

ValidationError::ValidationError(const Error& cause)
    : std::runtime_error(cause.what()),
      code_(cause.code()),
      index_(cause.index()) {}

namespace {

// Input iterator that publishes how far the parser has read.
class TrackingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator(const char* p, const char** cursor) : p_(p), cursor_(cursor) {}

  reference operator*() const { return *p_; }
  TrackingIterator& operator++() {
    ++p_;
    *cursor_ = p_;
    return *this;
  }
  TrackingIterator operator++(int) {
    TrackingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ == b.p_; }
  friend bool operator!=(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ != b.p_; }

 private:
  const char* p_;
  const char** cursor_;
};

struct Location {
  std::size_t line;
  std::size_t column;
};

Location locate(std::string_view text, std::size_t offset) {
  Location loc{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

// Builds the DOM and remembers where every value starts, keyed by path.
class LocatingSax {
 public:
  LocatingSax(std::string_view text, json& root, const char** cursor)
      : text_(text), dom_(root, false), cursor_(cursor) {}

  bool null() { return scalar([&] { return dom_.null(); }); }
  bool boolean(bool v) { return scalar([&] { return dom_.boolean(v); }); }
  bool number_integer(json::number_integer_t v) { return scalar([&] { return dom_.number_integer(v); }); }
  bool number_unsigned(json::number_unsigned_t v) { return scalar([&] { return dom_.number_unsigned(v); }); }
  bool number_float(json::number_float_t v, const json::string_t& s) {
    return scalar([&] { return dom_.number_float(v, s); });
  }
  bool string(json::string_t& v) { return scalar([&] { return dom_.string(v); }); }
  bool binary(json::binary_t& v) { return scalar([&] { return dom_.binary(v); }); }

  bool start_object(std::size_t n) {
    record();
    frames_.push_back({false, 0, {}});
    return dom_.start_object(n);
  }
  bool key(json::string_t& k) {
    frames_.back().key = k;
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    advance();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    record();
    frames_.push_back({true, 0, {}});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    advance();
    return dom_.end_array();
  }

  bool parse_error(std::size_t position, const std::string& /*lastToken*/,
                   const nlohmann::detail::exception& ex) {
    std::string message = ex.what();
    if (const auto colon = message.find(": ", message.find("column")); colon != std::string::npos) {
      message = message.substr(colon + 2);
    }
    const Location loc = locate(text_, position == 0 ? 0 : position - 1);
    throw ParseError(message, loc.line, loc.column);
  }

  std::map<std::string, std::size_t> takePositions() { return std::move(positions_); }

 private:
  struct Frame {
    bool isArray;
    std::size_t index;
    std::string key;
  };

  template <typename F>
  bool scalar(F&& f) {
    record();
    advance();
    return f();
  }

  std::string path() const {
    std::string s;
    for (const auto& f : frames_) {
      s += '/';
      s += f.isArray ? std::to_string(f.index) : f.key;
    }
    return s;
  }

  void record() { positions_.emplace(path(), tokenStart()); }

  void advance() {
    if (!frames_.empty() && frames_.back().isArray) ++frames_.back().index;
  }

  // The parser has read up to *cursor_, possibly one character past a number.
  std::size_t tokenStart() const {
    std::size_t i = static_cast<std::size_t>(*cursor_ - text_.data());
    if (i == 0) return 0;
    --i;
    while (i > 0 && (std::isspace(static_cast<unsigned char>(text_[i])) || text_[i] == ',' ||
                     text_[i] == ']' || text_[i] == '}')) {
      --i;
    }
    if (text_[i] == '"') {
      while (i > 0) {
        --i;
        if (text_[i] != '"') continue;
        std::size_t slashes = 0;
        while (i > slashes && text_[i - slashes - 1] == '\\') ++slashes;
        if (slashes % 2 == 0) break;
      }
      return i;
    }
    if (text_[i] == '{' || text_[i] == '[') return i;
    while (i > 0 && (std::isalnum(static_cast<unsigned char>(text_[i - 1])) || text_[i - 1] == '.' ||
                     text_[i - 1] == '+' || text_[i - 1] == '-')) {
      --i;
    }
    return i;
  }

  std::string_view text_;
  nlohmann::detail::json_sax_dom_parser<json> dom_;
  const char** cursor_;
  std::vector<Frame> frames_;
  std::map<std::string, std::size_t> positions_;
};

class Reader {
 public:
  Reader(std::string_view text, std::map<std::string, std::size_t> positions)
      : text_(text), positions_(std::move(positions)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    std::string p = path;
    auto it = positions_.find(p);
    while (it == positions_.end() && !p.empty()) {
      p.erase(p.rfind('/'));
      it = positions_.find(p);
    }
    const Location loc = locate(text_, it == positions_.end() ? 0 : it->second);
    throw ParseError(message + (path.empty() ? "" : " at " + path), loc.line, loc.column);
  }

  const json& member(const json& obj, const std::string& path, const char* key) const {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
    return *it;
  }

  void expectObject(const json& v, const std::string& path,
                    std::initializer_list<std::string_view> allowed) const {
    if (!v.is_object()) fail(path, "expected an object");
    for (const auto& [k, _] : v.items()) {
      bool known = false;
      for (auto a : allowed) known = known || a == k;
      if (!known) fail(path + "/" + k, "unknown key \"" + k + "\"");
    }
  }

  double number(const json& v, const std::string& path) const {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
      if (auto d = parseNonFinite(v.get_ref<const std::string&>())) return *d;
    }
    fail(path, "expected a number");
  }

  ExponentVector exponent(const json& v, const std::string& path) const {
    if (!v.is_object()) fail(path, "expected an object of rational strings");
    ExponentVector::Coords coords;
    for (const auto& [name, q] : v.items()) {
      const std::string sub = path + "/" + name;
      if (!q.is_string()) fail(sub, "expected a rational string \"p\" or \"p/q\"");
      const auto& s = q.get_ref<const std::string&>();
      const auto r = Rational::parse(s);
      if (!r) fail(sub, "malformed rational \"" + s + "\"");
      if (!r->isZero()) coords.emplace(name, *r);
    }
    return ExponentVector(std::move(coords));
  }

 private:
  std::string_view text_;
  std::map<std::string, std::size_t> positions_;
};

SeriesSpec build(const json& root, const Reader& rd) {
  rd.expectObject(root, "", {"symbols", "terms", "abscissa", "tail"});
  SeriesSpec spec;

  const json& symbols = rd.member(root, "", "symbols");
  if (!symbols.is_array()) rd.fail("/symbols", "expected an array");
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::string path = "/symbols/" + std::to_string(i);
    const json& s = symbols[i];
    rd.expectObject(s, path, {"name", "value"});
    const json& name = rd.member(s, path, "name");
    if (!name.is_string()) rd.fail(path + "/name", "expected a string");
    const double value = rd.number(rd.member(s, path, "value"), path + "/value");
    try {
      spec.symbols.add(name.get<std::string>(), value);
    } catch (const Error& e) {
      throw ValidationError(e);
    }
  }

  const json& terms = rd.member(root, "", "terms");
  if (!terms.is_array()) rd.fail("/terms", "expected an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "/terms/" + std::to_string(i);
    const json& t = terms[i];
    rd.expectObject(t, path, {"exponent", "coeff"});
    Term term;
    term.exponent = rd.exponent(rd.member(t, path, "exponent"), path + "/exponent");
    const json& c = rd.member(t, path, "coeff");
    rd.expectObject(c, path + "/coeff", {"re", "im"});
    term.coeff = {rd.number(rd.member(c, path + "/coeff", "re"), path + "/coeff/re"),
                  rd.number(rd.member(c, path + "/coeff", "im"), path + "/coeff/im")};
    spec.terms.push_back(std::move(term));
  }

  if (const auto it = root.find("abscissa"); it != root.end()) spec.abscissa = rd.number(*it, "/abscissa");

  if (const auto it = root.find("tail"); it != root.end()) {
    rd.expectObject(*it, "/tail", {"lambdaNext", "coeffBound", "minGap"});
    TailMajorant tail;
    tail.lambdaNext = rd.exponent(rd.member(*it, "/tail", "lambdaNext"), "/tail/lambdaNext");
    tail.coeffBound = rd.number(rd.member(*it, "/tail", "coeffBound"), "/tail/coeffBound");
    tail.minGap = rd.number(rd.member(*it, "/tail", "minGap"), "/tail/minGap");
    spec.tail = std::move(tail);
  }

  try {
    validateSeries(spec);
  } catch (const Error& e) {
    throw ValidationError(e);
  }
  return spec;
}

}  // namespace

SeriesSpec parseSeries(std::string_view text) {
  json root;
  const char* cursor = text.data();
  LocatingSax sax(text, root, &cursor);
  json::sax_parse(TrackingIterator(text.data(), &cursor), TrackingIterator(text.data() + text.size(), &cursor),
                  &sax);
  return build(root, Reader(text, sax.takePositions()));
}

SeriesSpec parseSeriesFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseSeries(buf.str());
}

std::string emitSeries(const SeriesSpec& spec) {
  nlohmann::ordered_json doc;
  doc["symbols"] = nlohmann::ordered_json::array();
  for (const auto& s : spec.symbols.symbols()) {
    doc["symbols"].push_back({{"name", s.name}, {"value", numberJson(s.value)}});
  }
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : spec.terms) {
    doc["terms"].push_back({{"exponent", exponentJson(t.exponent)}, {"coeff", complexJson(t.coeff)}});
  }
  if (spec.abscissa != -std::numeric_limits<double>::infinity()) doc["abscissa"] = numberJson(spec.abscissa);
  if (spec.tail) {
    doc["tail"] = {{"lambdaNext", exponentJson(spec.tail->lambdaNext)},
                   {"coeffBound", numberJson(spec.tail->coeffBound)},
                   {"minGap", numberJson(spec.tail->minGap)}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace bohr::cli
