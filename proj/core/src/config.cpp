#include "fewcycle/config.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

#include "fewcycle/errors.hpp"

namespace fewcycle {

namespace {

struct Entry {
  std::string value;
  std::size_t line = 0;
};

using Section = std::map<std::string, Entry>;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"scenario", {"name"}},
      {"atom", {"omega31", "omega21"}},
      {"pump", {"shape", "omega_carrier", "rabi_peak", "tau_p", "chirp", "cep"}},
      {"stokes", {"shape", "omega_carrier", "rabi_peak", "tau_p", "chirp", "cep"}},
      {"grid", {"dt", "t_start", "t_end", "store_every", "equation"}},
      {"sweep", {"observable", "axis1", "axis2"}},
      {"output", {"dir", "trajectory", "sweep", "summary"}},
  };
  return s;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::map<std::string, Section> tokenize(std::string_view text) {
  std::map<std::string, Section> sections;
  std::string current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (!schema().contains(current))
        throw UnknownKeyError(line_no, "unknown section [" + current + "]");
      if (sections.contains(current))
        throw ParseError(line_no, "duplicate section [" + current + "]");
      sections[current];
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    if (current.empty()) throw ParseError(line_no, "key outside of any section");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError(line_no, "empty key");
    if (!schema().at(current).contains(key))
      throw UnknownKeyError(line_no, "unknown key '" + key + "' in [" + current + "]");
    auto& section = sections[current];
    if (section.contains(key))
      throw ParseError(line_no, "duplicate key '" + key + "' in [" + current + "]");
    section[key] = {value, line_no};
  }
  return sections;
}

double to_double(const Entry& e, std::string_view key) {
  double v = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || e.value.empty())
    throw ParseError(e.line, "expected a number for '" + std::string(key) + "', got '" +
                                 e.value + "'");
  return v;
}

std::size_t to_count(const Entry& e, std::string_view key, std::string_view text) {
  std::size_t v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty())
    throw ParseError(e.line, "expected a non-negative integer for '" + std::string(key) +
                                 "', got '" + std::string(text) + "'");
  return v;
}

class SectionReader {
 public:
  SectionReader(const std::map<std::string, Section>& all, std::string name)
      : name_(std::move(name)) {
    if (auto it = all.find(name_); it != all.end()) section_ = &it->second;
  }

  bool present() const { return section_ != nullptr; }
  const Entry* find(const std::string& key) const {
    if (!section_) return nullptr;
    auto it = section_->find(key);
    return it == section_->end() ? nullptr : &it->second;
  }
  const Entry& require(const std::string& key) const {
    if (const Entry* e = find(key)) return *e;
    throw ValidationError("missing field [" + name_ + "] " + key);
  }
  double number(const std::string& key) const { return to_double(require(key), key); }
  double number_or(const std::string& key, double fallback) const {
    const Entry* e = find(key);
    return e ? to_double(*e, key) : fallback;
  }
  std::string text_or(const std::string& key, std::string fallback) const {
    const Entry* e = find(key);
    return e ? e->value : fallback;
  }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  const Section* section_ = nullptr;
};

// Rethrows domain errors with the section prefix.
template <class F>
auto anchored(const std::string& section, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ValidationError("[" + section + "] " + e.what());
  }
}

PulseSpec read_pulse(const SectionReader& r) {
  if (!r.present()) throw ValidationError("missing section [" + r.name() + "]");
  PulseSpec p;
  p.shape = anchored(r.name(), [&] { return parse_pulse_shape(r.require("shape").value); });
  p.omega_carrier = r.number("omega_carrier");
  p.rabi_peak = r.number("rabi_peak");
  p.tau_p = r.number("tau_p");
  p.chirp = r.number_or("chirp", 0.0);
  p.cep = r.number_or("cep", 0.0);
  anchored(r.name(), [&] {
    p.validate();
    return 0;
  });
  return p;
}

SweepAxis read_axis(const Entry& e, const std::string& key) {
  std::istringstream in(e.value);
  std::string parameter, start, end, count, extra;
  if (!(in >> parameter >> start >> end >> count) || (in >> extra))
    throw ParseError(e.line, "axis expects '<parameter> <start> <end> <count>'");
  SweepAxis a;
  a.parameter = anchored("sweep", [&] { return parse_sweep_parameter(parameter); });
  a.start = to_double({start, e.line}, key);
  a.end = to_double({end, e.line}, key);
  a.count = to_count(e, key, count);
  return a;
}

CouplingForm parse_form(const Entry& e) {
  if (e.value == "corrected") return CouplingForm::Corrected;
  if (e.value == "verbatim") return CouplingForm::Verbatim;
  throw ValidationError("[grid] equation must be 'corrected' or 'verbatim', got '" + e.value +
                        "'");
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

SweepSpec ScenarioConfig::sweep_spec() const {
  if (!sweep) throw ValidationError("configuration has no [sweep] section");
  return {scenario, sweep->axes, sweep->observable};
}

ScenarioConfig parse_config(std::string_view text) {
  const auto sections = tokenize(text);
  ScenarioConfig cfg;

  const SectionReader scenario(sections, "scenario");
  cfg.name = scenario.text_or("name", cfg.name);

  const SectionReader atom(sections, "atom");
  if (!atom.present()) throw ValidationError("missing section [atom]");
  const double w31 = atom.number("omega31");
  const double w21 = atom.number("omega21");
  cfg.scenario.atom = anchored("atom", [&] { return LambdaAtom(w31, w21); });

  cfg.scenario.pump = read_pulse(SectionReader(sections, "pump"));
  cfg.scenario.stokes = read_pulse(SectionReader(sections, "stokes"));

  const SectionReader grid(sections, "grid");
  cfg.scenario.dt = grid.number_or("dt", kDefaultDt);
  const Entry* t0 = grid.find("t_start");
  const Entry* t1 = grid.find("t_end");
  if ((t0 == nullptr) != (t1 == nullptr))
    throw ValidationError("[grid] t_start and t_end must be given together");
  if (t0) cfg.scenario.window = Window{to_double(*t0, "t_start"), to_double(*t1, "t_end")};
  if (const Entry* e = grid.find("store_every")) {
    cfg.store_every = to_count(*e, "store_every", e->value);
    if (cfg.store_every == 0) throw ValidationError("[grid] store_every must be >= 1");
  }
  if (const Entry* e = grid.find("equation")) cfg.scenario.form = parse_form(*e);
  anchored("grid", [&] {
    cfg.scenario.grid().validate();
    return 0;
  });

  const SectionReader sweep(sections, "sweep");
  if (sweep.present()) {
    SweepSection s;
    if (const Entry* e = sweep.find("observable"))
      s.observable = anchored("sweep", [&] { return parse_sweep_observable(e->value); });
    s.axes.push_back(read_axis(sweep.require("axis1"), "axis1"));
    if (const Entry* e = sweep.find("axis2")) s.axes.push_back(read_axis(*e, "axis2"));
    cfg.sweep = s;
    anchored("sweep", [&] {
      cfg.sweep_spec().validate();
      return 0;
    });
  }

  const SectionReader out(sections, "output");
  cfg.output.dir = out.text_or("dir", cfg.output.dir);
  cfg.output.trajectory = out.text_or("trajectory", cfg.output.trajectory);
  cfg.output.sweep = out.text_or("sweep", cfg.output.sweep);
  cfg.output.summary = out.text_or("summary", cfg.output.summary);
  return cfg;
}

namespace {

void emit_pulse(std::ostringstream& out, const char* section, const PulseSpec& p) {
  out << '[' << section << "]\n"
      << "shape = " << to_string(p.shape) << '\n'
      << "omega_carrier = " << format_double(p.omega_carrier) << '\n'
      << "rabi_peak = " << format_double(p.rabi_peak) << '\n'
      << "tau_p = " << format_double(p.tau_p) << '\n'
      << "chirp = " << format_double(p.chirp) << '\n'
      << "cep = " << format_double(p.cep) << "\n\n";
}

std::string axis_text(const SweepAxis& a) {
  return std::string(to_string(a.parameter)) + ' ' + format_double(a.start) + ' ' +
         format_double(a.end) + ' ' + std::to_string(a.count);
}

}  // namespace

std::string emit_config(const ScenarioConfig& c) {
  std::ostringstream out;
  const Scenario& s = c.scenario;
  out << "[scenario]\nname = " << c.name << "\n\n";
  out << "[atom]\nomega31 = " << format_double(s.atom.omega31())
      << "\nomega21 = " << format_double(s.atom.omega21()) << "\n\n";
  emit_pulse(out, "pump", s.pump);
  emit_pulse(out, "stokes", s.stokes);
  out << "[grid]\ndt = " << format_double(s.dt) << '\n';
  if (s.window)
    out << "t_start = " << format_double(s.window->start)
        << "\nt_end = " << format_double(s.window->end) << '\n';
  out << "store_every = " << c.store_every << '\n'
      << "equation = " << (s.form == CouplingForm::Corrected ? "corrected" : "verbatim")
      << "\n\n";
  if (c.sweep) {
    out << "[sweep]\nobservable = " << to_string(c.sweep->observable) << '\n';
    for (std::size_t i = 0; i < c.sweep->axes.size(); ++i)
      out << "axis" << i + 1 << " = " << axis_text(c.sweep->axes[i]) << '\n';
    out << '\n';
  }
  out << "[output]\ndir = " << c.output.dir << "\ntrajectory = " << c.output.trajectory
      << "\nsweep = " << c.output.sweep << "\nsummary = " << c.output.summary << '\n';
  return out.str();
}

}  // namespace fewcycle
