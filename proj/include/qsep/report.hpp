#ifndef QSEP_REPORT_HPP
#define QSEP_REPORT_HPP

#include <cctype>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "decomposition.hpp"
#include "properties.hpp"
#include "relation.hpp"
#include "text_format.hpp"
#include "verification.hpp"
#include "zoo.hpp"

namespace qsep {

// "key: true" or "key: false witness=a,b,..." per property, stable order.
[[nodiscard]] inline std::string format_profile(PropertyProfile const& p) {
  std::ostringstream os;
  for (auto const& [name, v] : p.fields()) {
    os << name << ": " << (v->holds ? "true" : "false");
    if (!v->holds) {
      os << " witness=" << detail::join(v->witness);
    }
    os << '\n';
  }
  return os.str();
}

[[nodiscard]] inline std::string format_omega_report(OmegaReport const& r) {
  std::ostringstream os;
  auto line = [&os](std::string_view name, auto const& w) {
    os << name << ": " << (w ? "violated witness=" + detail::join(*w) : "satisfied") << '\n';
  };
  line("eq8", r.eq8_violation);
  line("eq9", r.eq9_violation);
  line("eq10", r.eq10_violation);
  return os.str();
}

[[nodiscard]] inline std::string format_classes(Congruence const& c) {
  std::ostringstream os;
  for (std::size_t k = 0; k < c.number_of_classes(); ++k) {
    os << "class " << k << ": {" << detail::join(c.classes()[k]) << "}\n";
  }
  return os.str();
}

[[nodiscard]] inline std::string format_decomposition(SemilatticeDecomposition const& d) {
  std::ostringstream os;
  os << "classes: " << d.congruence.number_of_classes() << '\n';
  os << format_classes(d.congruence);
  os << "quotient_is_semilattice: " << (d.quotient_is_semilattice ? "true" : "false") << '\n';
  os << "quotient:\n" << format_table(d.quotient.quotient);
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    auto const& c = d.components[k];
    os << "component " << k << ": elements {" << detail::join(c.elements) << "}\n";
    if (c.table) {
      os << format_table(*c.table);
      std::istringstream profile(format_profile(classify(*c.table)));
      for (std::string line; std::getline(profile, line);) {
        os << "  " << line << '\n';
      }
    } else {
      os << "  not closed under the product\n";
    }
  }
  return os.str();
}

// The semilattice order x <= y iff xy = x, drawn as its covering relation.
[[nodiscard]] inline std::string semilattice_dot(CayleyTable const& q) {
  auto const n   = q.size();
  auto       leq = [&q](element_id x, element_id y) { return q(x, y) == x; };
  std::ostringstream os;
  os << "digraph semilattice {\n";
  for (element_id x = 0; x < n; ++x) {
    os << "  c" << x << ";\n";
  }
  for (element_id x = 0; x < n; ++x) {
    for (element_id y = 0; y < n; ++y) {
      if (x == y || !leq(x, y)) {
        continue;
      }
      bool covered = true;
      for (element_id z = 0; z < n && covered; ++z) {
        covered = z == x || z == y || !(leq(x, z) && leq(z, y));
      }
      if (covered) {
        os << "  c" << x << " -> c" << y << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

[[nodiscard]] inline std::string format_report(VerificationReport const& r) {
  std::ostringstream os;
  os << "check " << r.check << ": " << to_string(r.outcome()) << " (instances=" << r.instances
     << " applicable=" << r.applicable << " violations=" << r.violations << ")\n";
  for (auto const& t : r.tallies) {
    os << "  " << t.name << ": applicable=" << t.applicable << " violations=" << t.violations
       << '\n';
  }
  for (auto const& [k, v] : r.counters) {
    os << "  " << k << ": " << v << '\n';
  }
  for (auto const& w : r.witnesses) {
    os << "  witness " << w.detail << '\n';
    std::istringstream table(format_table(w.table));
    for (std::string line; std::getline(table, line);) {
      os << "    " << line << '\n';
    }
  }
  return os.str();
}

// Zoo shorthand "<name><p1>[,<p2>]", e.g. "null2", "monogenic3,1",
// "rectangular_band2,2". Names: left_zero, right_zero, rectangular_band,
// null, chain, cyclic, monogenic.
[[nodiscard]] inline CayleyTable zoo_by_name(std::string_view name,
                                             std::vector<std::size_t> const& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw Error("zoo '" + std::string(name) + "' takes " + std::to_string(k)
                  + " parameter(s)");
    }
  };
  if (name == "left_zero") {
    need(1);
    return zoo::left_zero(params[0]);
  }
  if (name == "right_zero") {
    need(1);
    return zoo::right_zero(params[0]);
  }
  if (name == "rectangular_band") {
    need(2);
    return zoo::rectangular_band(params[0], params[1]);
  }
  if (name == "null") {
    need(1);
    return zoo::null_semigroup(params[0]);
  }
  if (name == "chain") {
    need(1);
    return zoo::chain_semilattice(params[0]);
  }
  if (name == "cyclic") {
    need(1);
    return zoo::cyclic_group(params[0]);
  }
  if (name == "monogenic") {
    need(2);
    return zoo::monogenic(params[0], params[1]);
  }
  throw Error("unknown zoo semigroup '" + std::string(name) + "'");
}

[[nodiscard]] inline CayleyTable zoo_by_shorthand(std::string_view spec) {
  std::size_t split = 0;
  while (split < spec.size()
         && (std::isalpha(static_cast<unsigned char>(spec[split])) || spec[split] == '_')) {
    ++split;
  }
  auto const               name = spec.substr(0, split);
  std::vector<std::size_t> params;
  std::string_view         rest = spec.substr(split);
  if (!rest.empty() && rest.back() == ',') {
    throw Error("bad zoo parameter in '" + std::string(spec) + "'");
  }
  while (!rest.empty()) {
    auto const comma = rest.find(',');
    auto const tok   = rest.substr(0, comma);
    std::size_t v    = 0;
    auto [p, ec]     = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size()) {
      throw Error("bad zoo parameter in '" + std::string(spec) + "'");
    }
    params.push_back(v);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return zoo_by_name(name, params);
}

}  // namespace qsep

#endif  // QSEP_REPORT_HPP
