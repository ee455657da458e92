#include "douglas/report_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace douglas {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += "\"";
  return out;
}

template <typename Map, typename Fn>
void emit_object(std::ostream& os, const Map& map, Fn&& value_emitter) {
  os << "{";
  bool first = true;
  for (const auto& [key, value] : map) {
    if (!first) os << ",";
    first = false;
    os << quote(key) << ":";
    value_emitter(value);
  }
  os << "}";
}

std::string emit_json(const EnergyReport& r, bool include_timings) {
  std::ostringstream os;
  os << "{";
  os << "\"n\":" << r.n << ",";
  os << "\"label\":" << quote(r.label) << ",";
  os << "\"params\":{";
  os << "\"K\":" << r.config.K << ",";
  os << "\"level\":" << r.levels_used << ",";
  os << "\"double_integral_mode\":"
     << quote(r.config.di_mode == DoubleIntegralMode::offset_grids ? "offset_grids" : "abel_j")
     << ",";
  os << "\"abel\":[";
  for (std::size_t i = 0; i < r.config.abel.size(); ++i)
    os << (i ? "," : "") << fmt(r.config.abel[i]);
  os << "],";
  os << "\"seed\":" << r.config.seed << ",";
  os << "\"radial_order\":" << r.config.radial_order << ",";
  os << "\"flux_cap\":" << fmt(r.config.flux_divergence_cap);
  os << "},";
  os << "\"forms\":";
  emit_object(os, r.forms, [&](double v) { os << fmt(v); });
  os << ",\"form_errors\":";
  emit_object(os, r.form_errors, [&](const std::string& v) { os << quote(v); });
  os << ",\"deviations\":";
  emit_object(os, r.deviations, [&](const EnergyReport::Deviation& d) {
    os << "{\"abs\":" << fmt(d.abs) << ",\"rel\":" << fmt(d.rel) << "}";
  });
  os << ",\"residues\":";
  emit_object(os, r.residues, [&](double v) { os << fmt(v); });
  if (include_timings) {
    os << ",\"timings\":";
    emit_object(os, r.timings, [&](double v) { os << fmt(v); });
  }
  os << ",\"notes\":[";
  for (std::size_t i = 0; i < r.notes.size(); ++i) os << (i ? "," : "") << quote(r.notes[i]);
  os << "]}";
  os << "\n";
  return os.str();
}

std::string emit_csv(const EnergyReport& r, bool include_timings) {
  std::ostringstream os;
  os << "form,value,abs_dev_vs_spectral,rel_dev_vs_spectral,seconds\n";
  auto dev_vs_spectral = [&](const std::string& form) -> const EnergyReport::Deviation* {
    auto it = r.deviations.find(form + "|spectral");
    if (it != r.deviations.end()) return &it->second;
    it = r.deviations.find("spectral|" + form);
    if (it != r.deviations.end()) return &it->second;
    return nullptr;
  };
  for (const auto& [form, value] : r.forms) {
    os << form << "," << fmt(value) << ",";
    if (form == "spectral") {
      os << "0,0,";
    } else if (const auto* d = dev_vs_spectral(form)) {
      os << fmt(d->abs) << "," << fmt(d->rel) << ",";
    } else {
      os << ",,";
    }
    auto it = r.timings.find(form);
    if (include_timings && it != r.timings.end()) os << fmt(it->second);
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_report(const EnergyReport& report, ReportFormat format, bool include_timings) {
  return format == ReportFormat::json ? emit_json(report, include_timings)
                                      : emit_csv(report, include_timings);
}

EnergyReport parse_report_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  EnergyReport r;
  r.n = j.at("n").get<int>();
  r.label = j.at("label").get<std::string>();
  const auto& params = j.at("params");
  r.config.K = params.at("K").get<int>();
  r.levels_used = params.at("level").get<int>();
  r.config.di_mode = params.at("double_integral_mode").get<std::string>() == "abel_j"
                         ? DoubleIntegralMode::abel_j
                         : DoubleIntegralMode::offset_grids;
  r.config.abel = params.at("abel").get<std::vector<double>>();
  r.config.seed = params.at("seed").get<std::uint64_t>();
  r.config.radial_order = params.at("radial_order").get<int>();
  r.config.flux_divergence_cap = params.at("flux_cap").get<double>();
  for (const auto& [key, value] : j.at("forms").items()) r.forms[key] = value.get<double>();
  for (const auto& [key, value] : j.at("form_errors").items())
    r.form_errors[key] = value.get<std::string>();
  for (const auto& [key, value] : j.at("deviations").items())
    r.deviations[key] = {value.at("abs").get<double>(), value.at("rel").get<double>()};
  for (const auto& [key, value] : j.at("residues").items()) r.residues[key] = value.get<double>();
  if (j.contains("timings"))
    for (const auto& [key, value] : j.at("timings").items()) r.timings[key] = value.get<double>();
  for (const auto& note : j.at("notes")) r.notes.push_back(note.get<std::string>());
  return r;
}

}  // namespace douglas
