#include "wap/cli/report.hpp"

#include <sstream>

namespace wap::cli {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const ParikhVector& v) {
  Json out = Json::array();
  for (int a = 0; a < v.alphabet_size; ++a) out.push_back(v[static_cast<Letter>(a)]);
  return out;
}

Json to_json(const WitnessReport& w) {
  Json freqs = Json::array();
  for (const auto& f : w.frequencies) freqs.push_back(to_json(f));
  return Json{{"frequencies", freqs},
              {"levels", w.levels},
              {"denominator", w.denominator},
              {"hits", w.hits},
              {"first_hit", w.first_hit},
              {"last_hit", w.last_hit},
              {"max_gap", w.max_gap},
              {"tag", to_string(w.tag)}};
}

Json to_json(const MorphismMatrix& m) {
  return Json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json to_json(const WapCertificate& c) {
  return Json{{"wap", yes_no(c.wap)},
              {"condition", to_string(c.condition)},
              {"start", c.start},
              {"conjugated", c.conjugated},
              {"analysed_morphism", c.analysed.str()},
              {"matrix", to_json(c.matrix)},
              {"graphic", c.graphic},
              {"delta", c.delta},
              {"zero_at", optional_json(c.zero_at)},
              {"zero_is_exact", c.zero_is_exact},
              {"A", optional_json(c.A)},
              {"t", optional_json(c.t)},
              {"j", optional_json(c.j)},
              {"lhs", optional_json(c.lhs)}};
}

Json to_json(const BoundedWapVerdict& v) {
  return Json{{"bounded_wap", yes_no(v.bounded_wap)},
              {"abelian_periodic", yes_no(v.abelian_periodic())},
              {"reason", to_string(v.reason)},
              {"primitive", v.primitive}};
}

Json to_json(const OrbitLevel& level) {
  return Json{{"length", level.word.size()},
              {"position", level.position},
              {"parikh", to_json(level.parikh)},
              {"frequency", to_json(level.frequency)},
              {"relation", to_string(level.relation)},
              {"returns_spanned", level.returns_spanned}};
}

Json make_report(const std::string& command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}};
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "n/a";
  return v.dump();
}

void flatten(const Json& node, const std::string& path, std::ostringstream& os) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, path.empty() ? key : path + "." + key, os);
    }
    return;
  }
  if (node.is_array()) {
    const bool flat = std::all_of(node.begin(), node.end(),
                                  [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      os << path << ": ";
      for (std::size_t i = 0; i < node.size(); ++i) {
        if (i > 0) os << ',';
        os << scalar(node[i]);
      }
      os << '\n';
      return;
    }
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], path + "[" + std::to_string(i) + "]", os);
    }
    return;
  }
  os << path << ": " << scalar(node) << '\n';
}

}  // namespace

std::string render(const Json& report, ReportFormat format) {
  if (format == ReportFormat::json) return report.dump(2) + "\n";
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

}  // namespace wap::cli
