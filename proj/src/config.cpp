#include "su11net/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "su11net/metrology.hpp"

namespace su11net::config {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  const std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size() && !buf.empty() &&
         std::isfinite(out);
}

bool parse_int(std::string_view s, int& out) {
  const std::string buf(s);
  char* end = nullptr;
  const long v = std::strtol(buf.c_str(), &end, 10);
  if (end != buf.c_str() + buf.size() || buf.empty()) return false;
  out = static_cast<int>(v);
  return static_cast<long>(out) == v;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

struct RawEntry {
  std::string value;
  int line = 0;
};

// One parsed key = value entry per (section, key); duplicates are reported.
struct RawConfig {
  std::map<std::string, RawEntry> entries;  // key "section.key" or "key"
  std::vector<std::string> errors;

  void fail(int line, const std::string& msg) {
    errors.push_back("line " + std::to_string(line) + ": " + msg);
  }
};

RawConfig scan(std::string_view text) {
  RawConfig raw;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        raw.fail(line_no, "unterminated section header");
        continue;
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "sweep" && section != "output")
        raw.fail(line_no, "unknown section [" + section + "]");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      raw.fail(line_no, "expected key = value, got '" + std::string(line) +
                            "'");
      continue;
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) {
      raw.fail(line_no, "missing key before '='");
      continue;
    }
    const std::string slot = section.empty() ? key : section + "." + key;
    if (raw.entries.count(slot)) {
      raw.fail(line_no, "duplicate key '" + slot + "'");
      continue;
    }
    raw.entries[slot] = {value, line_no};
  }
  return raw;
}

// Pulls one entry out of the raw map, so leftovers can be reported as
// unknown keys afterwards.
std::optional<RawEntry> take(RawConfig& raw, const std::string& slot) {
  auto it = raw.entries.find(slot);
  if (it == raw.entries.end()) return std::nullopt;
  RawEntry e = it->second;
  raw.entries.erase(it);
  return e;
}

std::optional<double> take_double(RawConfig& raw, const std::string& slot,
                                  int* line = nullptr) {
  auto e = take(raw, slot);
  if (!e) return std::nullopt;
  if (line) *line = e->line;
  double v = 0.0;
  if (!parse_double(e->value, v)) {
    raw.fail(e->line, "'" + slot + "' is not a number: '" + e->value + "'");
    return std::nullopt;
  }
  return v;
}

std::optional<int> take_int(RawConfig& raw, const std::string& slot,
                            int* line = nullptr) {
  auto e = take(raw, slot);
  if (!e) return std::nullopt;
  if (line) *line = e->line;
  int v = 0;
  if (!parse_int(e->value, v)) {
    raw.fail(e->line, "'" + slot + "' is not an integer: '" + e->value + "'");
    return std::nullopt;
  }
  return v;
}

std::optional<EncodingSpec> parse_encoding(RawConfig& raw) {
  auto e = take(raw, "encoding");
  if (!e) return std::nullopt;
  EncodingSpec spec;
  std::string_view v = trim(e->value);
  if (!v.empty() && v.front() == '[') {
    if (v.back() != ']') {
      raw.fail(e->line, "encoding array is missing ']'");
      return std::nullopt;
    }
    spec.form = EncodingForm::kExplicit;
    std::string_view body = trim(v.substr(1, v.size() - 2));
    while (!body.empty()) {
      const std::size_t comma = body.find(',');
      const std::string_view item =
          trim(comma == std::string_view::npos ? body : body.substr(0, comma));
      body = comma == std::string_view::npos
                 ? std::string_view{}
                 : trim(body.substr(comma + 1));
      double x = 0.0;
      if (!parse_double(item, x)) {
        raw.fail(e->line, "encoding entry is not a number: '" +
                              std::string(item) + "'");
        return std::nullopt;
      }
      spec.values.push_back(x);
    }
    if (spec.values.empty()) {
      raw.fail(e->line, "encoding array is empty");
      return std::nullopt;
    }
    return spec;
  }
  const std::size_t space = v.find(' ');
  const std::string_view word =
      space == std::string_view::npos ? v : trim(v.substr(0, space));
  const std::string_view rest =
      space == std::string_view::npos ? std::string_view{}
                                      : trim(v.substr(space + 1));
  if (word == "uniform")
    spec.form = EncodingForm::kUniform;
  else if (word == "alternating")
    spec.form = EncodingForm::kAlternating;
  else {
    raw.fail(e->line,
             "encoding must be an [array], 'uniform <v>' or "
             "'alternating <v>', got '" +
                 std::string(v) + "'");
    return std::nullopt;
  }
  if (!parse_double(rest, spec.value)) {
    raw.fail(e->line, "encoding '" + std::string(word) +
                          "' needs one numeric value");
    return std::nullopt;
  }
  return spec;
}

double encoding_mean(const EncodingSpec& spec, int modes) {
  switch (spec.form) {
    case EncodingForm::kExplicit:
      return std::accumulate(spec.values.begin(), spec.values.end(), 0.0) /
             static_cast<double>(spec.values.size());
    case EncodingForm::kUniform:
      return spec.value;
    case EncodingForm::kAlternating: {
      double sum = 0.0;
      for (int j = 0; j < modes; ++j)
        sum += (j % 2 == 0) ? spec.value : -spec.value;
      return sum / static_cast<double>(modes);
    }
    case EncodingForm::kDefault:
      break;
  }
  return 0.0;
}

}  // namespace

std::optional<EncodingSpec> parse_encoding_text(std::string_view text,
                                                std::string* error) {
  RawConfig raw;
  raw.entries["encoding"] = {std::string(trim(text)), 1};
  auto spec = parse_encoding(raw);
  if (!spec && error && !raw.errors.empty()) *error = raw.errors.front();
  return spec;
}

ParseResult parse_config(std::string_view text) {
  RawConfig raw = scan(text);
  ExperimentConfig c;

  if (auto e = take(raw, "scheme")) {
    if (auto s = circuit::scheme_from_id(e->value))
      c.scheme = *s;
    else
      raw.fail(e->line, "unknown scheme '" + e->value + "'");
  } else {
    raw.errors.push_back("missing required key 'scheme'");
  }

  bool modes_given = false;
  int modes_line = 0;
  if (auto m = take_int(raw, "modes", &modes_line)) {
    c.modes = *m;
    modes_given = true;
  } else if (auto m2 = take_int(raw, "M", &modes_line)) {
    c.modes = *m2;
    modes_given = true;
  }
  if (!modes_given && circuit::is_single_scheme(c.scheme)) c.modes = 1;
  if (c.modes < 1) raw.fail(modes_line, "modes must be >= 1");
  if (circuit::is_single_scheme(c.scheme) && c.modes != 1)
    raw.fail(modes_line,
             "scheme '" + std::string(circuit::scheme_id(c.scheme)) +
                 "' is single-mode but modes = " + std::to_string(c.modes));

  int r_line = 0;
  c.r = take_double(raw, "r", &r_line);
  if (c.r && *c.r < 0)
    raw.fail(r_line, "r must be >= 0, got " + fmt_double(*c.r));

  const bool sweep_section =
      raw.entries.count("sweep.start") || raw.entries.count("sweep.stop") ||
      raw.entries.count("sweep.steps");
  if (sweep_section) {
    SweepSpec sw;
    bool complete = true;
    int start_line = 0;
    int stop_line = 0;
    int steps_line = 0;
    if (auto v = take_double(raw, "sweep.start", &start_line))
      sw.start = *v;
    else {
      raw.errors.push_back("[sweep] needs 'start'");
      complete = false;
    }
    if (auto v = take_double(raw, "sweep.stop", &stop_line))
      sw.stop = *v;
    else {
      raw.errors.push_back("[sweep] needs 'stop'");
      complete = false;
    }
    if (auto v = take_int(raw, "sweep.steps", &steps_line))
      sw.steps = *v;
    else {
      raw.errors.push_back("[sweep] needs 'steps'");
      complete = false;
    }
    if (complete) {
      if (sw.steps < 1)
        raw.fail(steps_line, "[sweep] steps must be >= 1, got " +
                                 std::to_string(sw.steps));
      if (sw.stop < sw.start)
        raw.fail(stop_line, "[sweep] stop " + fmt_double(sw.stop) +
                                " is below start " + fmt_double(sw.start));
      if (sw.start < 0)
        raw.fail(start_line, "[sweep] start must be >= 0 (squeezing "
                             "strength), got " +
                                 fmt_double(sw.start));
      c.sweep = sw;
    }
  }
  if (c.r && c.sweep)
    raw.errors.push_back("give either 'r' or a [sweep] section, not both");
  if (!c.r && !sweep_section)
    raw.errors.push_back("one of 'r' or a [sweep] section is required");

  c.beta = take_double(raw, "beta");

  if (auto e = take(raw, "distributor")) {
    if (auto d = circuit::distributor_from_id(e->value))
      c.distributor = *d;
    else
      raw.fail(e->line, "unknown distributor '" + e->value +
                            "' (expected dft or hadamard)");
  }
  if (c.distributor == circuit::DistributorKind::kHadamard &&
      !power_of_two(c.modes))
    raw.errors.push_back("hadamard distributor needs a power-of-two mode "
                         "count, got " +
                         std::to_string(c.modes));

  if (auto spec = parse_encoding(raw)) {
    c.encoding = *spec;
    if (spec->form == EncodingForm::kExplicit &&
        static_cast<int>(spec->values.size()) != c.modes)
      raw.errors.push_back("encoding has " +
                           std::to_string(spec->values.size()) +
                           " entries but modes = " + std::to_string(c.modes));
  }

  int alpha_line = 0;
  c.alpha_seed = take_double(raw, "alpha_seed", &alpha_line);
  const bool homodyne = c.scheme == circuit::Scheme::kNetworkPhaseHomodyne;
  if (homodyne && (!c.alpha_seed || *c.alpha_seed <= 0))
    raw.errors.push_back(
        "the homodyne scheme needs a positive 'alpha_seed'");
  if (!homodyne && c.alpha_seed)
    raw.fail(alpha_line, "'alpha_seed' only applies to the homodyne scheme");

  bool fock = false;
  if (auto e = take(raw, "backend")) {
    if (e->value == "fock")
      fock = true;
    else if (e->value != "gaussian")
      raw.fail(e->line, "unknown backend '" + e->value +
                            "' (expected gaussian or fock)");
  }
  int cutoff_line = 0;
  const auto cutoff = take_int(raw, "cutoff", &cutoff_line);
  if (fock) {
    if (!cutoff)
      raw.errors.push_back("the fock backend needs a 'cutoff'");
    else if (*cutoff < 4)
      raw.fail(cutoff_line,
               "cutoff must be >= 4, got " + std::to_string(*cutoff));
    else
      c.backend = circuit::Backend::fock(*cutoff);
    if (c.modes > 4)
      raw.errors.push_back("the fock backend supports at most 4 modes, got " +
                           std::to_string(c.modes));
  } else if (cutoff) {
    raw.fail(cutoff_line, "'cutoff' only applies to the fock backend");
  }

  int eval_line = 0;
  c.eval_point = take_double(raw, "eval_point", &eval_line);
  if (circuit::is_phase_scheme(c.scheme)) {
    if (c.eval_point && *c.eval_point <= 0)
      raw.fail(eval_line, "phase schemes need eval_point > 0 (the signal "
                          "slope vanishes at 0), got " +
                              fmt_double(*c.eval_point));
    if (!c.eval_point && c.encoding.form != EncodingForm::kDefault &&
        encoding_mean(c.encoding, c.modes) <= 0)
      raw.errors.push_back("this phase encoding has a non-positive mean; "
                           "give an explicit eval_point > 0");
  }

  if (auto e = take(raw, "output.path")) c.out_path = e->value;
  if (auto e = take(raw, "output.format")) {
    if (e->value == "csv")
      c.format = OutputFormat::kCsv;
    else if (e->value == "json")
      c.format = OutputFormat::kJson;
    else
      raw.fail(e->line, "unknown format '" + e->value +
                            "' (expected csv or json)");
  }

  for (const auto& [slot, entry] : raw.entries)
    raw.fail(entry.line, "unknown key '" + slot + "'");

  ParseResult result;
  result.errors = std::move(raw.errors);
  if (result.errors.empty()) result.config = std::move(c);
  return result;
}

std::string to_text(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "scheme = " << circuit::scheme_id(c.scheme) << "\n";
  out << "modes = " << c.modes << "\n";
  if (c.r) out << "r = " << fmt_double(*c.r) << "\n";
  if (c.beta) out << "beta = " << fmt_double(*c.beta) << "\n";
  out << "distributor = " << circuit::distributor_id(c.distributor) << "\n";
  switch (c.encoding.form) {
    case EncodingForm::kDefault:
      break;
    case EncodingForm::kExplicit: {
      out << "encoding = [";
      for (std::size_t i = 0; i < c.encoding.values.size(); ++i) {
        if (i) out << ", ";
        out << fmt_double(c.encoding.values[i]);
      }
      out << "]\n";
      break;
    }
    case EncodingForm::kUniform:
      out << "encoding = uniform " << fmt_double(c.encoding.value) << "\n";
      break;
    case EncodingForm::kAlternating:
      out << "encoding = alternating " << fmt_double(c.encoding.value)
          << "\n";
      break;
  }
  if (c.alpha_seed) out << "alpha_seed = " << fmt_double(*c.alpha_seed) << "\n";
  if (c.backend.kind == circuit::Backend::Kind::kFock) {
    out << "backend = fock\n";
    out << "cutoff = " << c.backend.cutoff << "\n";
  } else {
    out << "backend = gaussian\n";
  }
  if (c.eval_point) out << "eval_point = " << fmt_double(*c.eval_point) << "\n";
  if (c.sweep) {
    out << "\n[sweep]\n";
    out << "start = " << fmt_double(c.sweep->start) << "\n";
    out << "stop = " << fmt_double(c.sweep->stop) << "\n";
    out << "steps = " << c.sweep->steps << "\n";
  }
  if (c.out_path || c.format != OutputFormat::kCsv) {
    out << "\n[output]\n";
    if (c.out_path) out << "path = " << *c.out_path << "\n";
    out << "format = " << (c.format == OutputFormat::kJson ? "json" : "csv")
        << "\n";
  }
  return out.str();
}

std::vector<double> sweep_values(const ExperimentConfig& c) {
  if (!c.sweep) return {c.r.value_or(0.0)};
  const SweepSpec& sw = *c.sweep;
  std::vector<double> values;
  values.reserve(sw.steps);
  if (sw.steps == 1) {
    values.push_back(sw.start);
    return values;
  }
  const double step = (sw.stop - sw.start) / static_cast<double>(sw.steps - 1);
  for (int i = 0; i < sw.steps; ++i)
    values.push_back(sw.start + step * static_cast<double>(i));
  return values;
}

std::vector<double> resolve_encoding(const ExperimentConfig& c,
                                     double eval_point) {
  switch (c.encoding.form) {
    case EncodingForm::kDefault:
      return std::vector<double>(c.modes, eval_point);
    case EncodingForm::kExplicit:
      return c.encoding.values;
    case EncodingForm::kUniform:
      return std::vector<double>(c.modes, c.encoding.value);
    case EncodingForm::kAlternating: {
      std::vector<double> v(c.modes);
      for (int j = 0; j < c.modes; ++j)
        v[j] = (j % 2 == 0) ? c.encoding.value : -c.encoding.value;
      return v;
    }
  }
  return {};
}

double resolve_eval_point(const ExperimentConfig& c) {
  if (c.eval_point) return *c.eval_point;
  if (c.encoding.form != EncodingForm::kDefault)
    return encoding_mean(c.encoding, c.modes);
  return metrology::default_eval_point(c.scheme);
}

}  // namespace su11net::config
