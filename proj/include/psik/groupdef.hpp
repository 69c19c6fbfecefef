#pragma once

// Line-oriented group-definition documents:
//
//   group <name>
//   kind cyclic | perm | product | semidirect | table
//   n <order>                         (cyclic)
//   degree <d>                        (perm)
//   gen <d images>                    (perm, repeatable)
//   factors <name> <name>             (product)
//   normal <name>                     (semidirect)
//   acting <name>                     (semidirect)
//   actgens <indices>                 (semidirect)
//   act <gen-index> <|N| images>      (semidirect, one per acting generator)
//   row <n entries>                   (table, one per element)
//   end
//
// '#' starts a comment. Names must be whitespace-free and unique;
// references resolve to earlier definitions in the same document.

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "psik/group.hpp"

namespace psik {

/// Parse or build failure with the 1-based source line.
struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

struct GroupDef {
  enum class Kind { Cyclic, Perm, Product, Semidirect, Table };

  std::string name;
  Kind kind = Kind::Cyclic;
  int line = 0;  // line of the "group" header

  long long n = 0;                                       // cyclic
  int degree = 0;                                        // perm
  std::vector<std::vector<Elem>> gens;                   // perm
  std::string factor_a, factor_b;                        // product
  std::string normal_name, acting_name;                  // semidirect
  std::vector<Elem> acting_gens;                         // semidirect
  std::vector<std::pair<Elem, std::vector<Elem>>> acts;  // semidirect: gen index -> images
  std::vector<std::vector<Elem>> rows;                   // table
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline long long parse_int(const std::string& tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

inline std::vector<Elem> parse_elems(const std::vector<std::string>& toks, std::size_t from,
                                     int line) {
  std::vector<Elem> out;
  for (std::size_t i = from; i < toks.size(); ++i) {
    long long v = parse_int(toks[i], line);
    if (v < 0 || v > 1000000) throw ParseError(line, "element index out of range: " + toks[i]);
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

inline GroupDef::Kind parse_kind(const std::string& tok, int line) {
  if (tok == "cyclic") return GroupDef::Kind::Cyclic;
  if (tok == "perm") return GroupDef::Kind::Perm;
  if (tok == "product") return GroupDef::Kind::Product;
  if (tok == "semidirect") return GroupDef::Kind::Semidirect;
  if (tok == "table") return GroupDef::Kind::Table;
  throw ParseError(line, "unknown kind '" + tok + "'");
}

inline void validate_def(const GroupDef& d, int end_line) {
  switch (d.kind) {
    case GroupDef::Kind::Cyclic:
      if (d.n < 1) throw ParseError(end_line, "cyclic group '" + d.name + "' needs n >= 1");
      break;
    case GroupDef::Kind::Perm:
      if (d.degree < 1) throw ParseError(end_line, "perm group '" + d.name + "' needs a degree");
      for (const auto& g : d.gens)
        if (static_cast<int>(g.size()) != d.degree)
          throw ParseError(end_line, "generator in '" + d.name + "' does not have " +
                                         std::to_string(d.degree) + " images");
      break;
    case GroupDef::Kind::Product:
      if (d.factor_a.empty() || d.factor_b.empty())
        throw ParseError(end_line, "product '" + d.name + "' needs two factors");
      break;
    case GroupDef::Kind::Semidirect: {
      if (d.normal_name.empty() || d.acting_name.empty())
        throw ParseError(end_line, "semidirect '" + d.name + "' needs normal and acting groups");
      if (d.acting_gens.empty())
        throw ParseError(end_line, "semidirect '" + d.name + "' needs actgens");
      if (d.acts.size() != d.acting_gens.size())
        throw ParseError(end_line, "semidirect '" + d.name + "' needs exactly one act line per acting generator");
      for (const auto& [gen, images] : d.acts) {
        bool found = false;
        for (Elem g : d.acting_gens) found = found || g == gen;
        if (!found)
          throw ParseError(end_line, "act line for generator " + std::to_string(gen) +
                                         " has no matching actgens entry in '" + d.name + "'");
      }
      break;
    }
    case GroupDef::Kind::Table:
      if (d.rows.empty()) throw ParseError(end_line, "table '" + d.name + "' has no rows");
      break;
  }
}

}  // namespace detail

/// Parse a document into definitions, in document order. Structural
/// problems (syntax, duplicate names, unresolved references) throw
/// ParseError with the offending line.
inline std::vector<GroupDef> parse_group_defs(const std::string& document) {
  std::vector<GroupDef> defs;
  std::map<std::string, int> by_name;

  std::istringstream in(document);
  std::string raw;
  int line_no = 0;
  bool in_block = false;
  GroupDef cur;
  bool kind_seen = false;

  auto resolve = [&](const std::string& ref, int line) {
    if (!by_name.count(ref))
      throw ParseError(line, "reference to undefined group '" + ref + "'");
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = detail::tokenize(raw);
    if (toks.empty()) continue;
    const std::string& key = toks[0];

    if (!in_block) {
      if (key != "group") throw ParseError(line_no, "expected 'group <name>', got '" + key + "'");
      if (toks.size() != 2) throw ParseError(line_no, "'group' takes exactly one name");
      if (by_name.count(toks[1])) throw ParseError(line_no, "duplicate group name '" + toks[1] + "'");
      cur = GroupDef{};
      cur.name = toks[1];
      cur.line = line_no;
      kind_seen = false;
      in_block = true;
      continue;
    }

    if (key == "end") {
      if (toks.size() != 1) throw ParseError(line_no, "'end' takes no arguments");
      if (!kind_seen) throw ParseError(line_no, "group '" + cur.name + "' has no kind");
      detail::validate_def(cur, line_no);
      by_name.emplace(cur.name, static_cast<int>(defs.size()));
      defs.push_back(std::move(cur));
      in_block = false;
    } else if (key == "kind") {
      if (toks.size() != 2) throw ParseError(line_no, "'kind' takes exactly one value");
      cur.kind = detail::parse_kind(toks[1], line_no);
      kind_seen = true;
    } else if (key == "n") {
      if (toks.size() != 2) throw ParseError(line_no, "'n' takes exactly one value");
      cur.n = detail::parse_int(toks[1], line_no);
    } else if (key == "degree") {
      if (toks.size() != 2) throw ParseError(line_no, "'degree' takes exactly one value");
      const long long d = detail::parse_int(toks[1], line_no);
      if (d < 1 || d > 1000000) throw ParseError(line_no, "degree out of range");
      cur.degree = static_cast<int>(d);
    } else if (key == "gen") {
      cur.gens.push_back(detail::parse_elems(toks, 1, line_no));
    } else if (key == "factors") {
      if (toks.size() != 3) throw ParseError(line_no, "'factors' takes exactly two names");
      resolve(toks[1], line_no);
      resolve(toks[2], line_no);
      cur.factor_a = toks[1];
      cur.factor_b = toks[2];
    } else if (key == "normal") {
      if (toks.size() != 2) throw ParseError(line_no, "'normal' takes exactly one name");
      resolve(toks[1], line_no);
      cur.normal_name = toks[1];
    } else if (key == "acting") {
      if (toks.size() != 2) throw ParseError(line_no, "'acting' takes exactly one name");
      resolve(toks[1], line_no);
      cur.acting_name = toks[1];
    } else if (key == "actgens") {
      if (toks.size() < 2) throw ParseError(line_no, "'actgens' needs at least one index");
      cur.acting_gens = detail::parse_elems(toks, 1, line_no);
    } else if (key == "act") {
      if (toks.size() < 3) throw ParseError(line_no, "'act' needs a generator index and images");
      auto vals = detail::parse_elems(toks, 1, line_no);
      cur.acts.emplace_back(vals[0], std::vector<Elem>(vals.begin() + 1, vals.end()));
    } else if (key == "row") {
      cur.rows.push_back(detail::parse_elems(toks, 1, line_no));
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  if (in_block) throw ParseError(line_no, "unterminated group '" + cur.name + "' (missing 'end')");
  return defs;
}

/// Instantiate parsed definitions, in order. Constructor precondition
/// failures (bad actions, caps, invalid tables) are rethrown as
/// ParseError carrying the definition's source line.
inline std::vector<FiniteGroup> build_group_defs(const std::vector<GroupDef>& defs,
                                                 const BuildLimits& limits = {}) {
  std::vector<FiniteGroup> groups;
  std::map<std::string, std::size_t> by_name;
  for (const auto& d : defs) {
    try {
      switch (d.kind) {
        case GroupDef::Kind::Cyclic: {
          FiniteGroup g = cyclic_group(d.n, limits);
          g.rename(d.name);
          groups.push_back(std::move(g));
          break;
        }
        case GroupDef::Kind::Perm: {
          std::vector<Permutation> gens;
          for (const auto& images : d.gens) gens.push_back(Permutation{images});
          FiniteGroup g = perm_group(d.degree, gens, limits);
          g.rename(d.name);
          groups.push_back(std::move(g));
          break;
        }
        case GroupDef::Kind::Product: {
          FiniteGroup g = direct_product(groups[by_name.at(d.factor_a)],
                                         groups[by_name.at(d.factor_b)], limits);
          g.rename(d.name);
          groups.push_back(std::move(g));
          break;
        }
        case GroupDef::Kind::Semidirect: {
          const FiniteGroup& N = groups[by_name.at(d.normal_name)];
          const FiniteGroup& H = groups[by_name.at(d.acting_name)];
          ActionSpec action;
          action.normal_order = N.order();
          for (Elem gen : d.acting_gens) {
            bool found = false;
            for (const auto& [g, images] : d.acts)
              if (g == gen) {
                action.maps.push_back(images);
                found = true;
                break;
              }
            if (!found)
              throw ValidationError("no act line for generator " + std::to_string(gen));
          }
          FiniteGroup g = semidirect_product(N, H, action, d.acting_gens, limits);
          g.rename(d.name);
          groups.push_back(std::move(g));
          break;
        }
        case GroupDef::Kind::Table: {
          groups.push_back(FiniteGroup::from_table(d.name, d.rows, limits));
          break;
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(d.line, "group '" + d.name + "': " + e.what());
    }
    by_name.emplace(d.name, groups.size() - 1);
  }
  return groups;
}

/// Parse and build in one step.
inline std::vector<FiniteGroup> load_groups_document(const std::string& document,
                                                     const BuildLimits& limits = {}) {
  return build_group_defs(parse_group_defs(document), limits);
}

/// Serialize a group as a raw-table definition block. Re-parsing yields
/// a group with a byte-identical Cayley table.
inline std::string serialize_table_def(const FiniteGroup& G) {
  std::string name = G.name();
  for (char& c : name)
    if (c == ' ' || c == '\t') c = '_';
  std::ostringstream out;
  out << "group " << name << "\n" << "kind table\n";
  for (Elem a = 0; a < G.order(); ++a) {
    out << "row";
    for (Elem b = 0; b < G.order(); ++b) out << ' ' << G.mul(a, b);
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace psik
