#include "reflectwist/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace reflectwist::io {

  namespace {
    [[noreturn]] void format_error(std::string const& msg) {
      throw InputError("FormatError", msg);
    }

    Elem elem_from_json(Json const& j, char const* what) {
      if (!j.is_number_integer()) {
        format_error(std::string(what) + " entries must be integers");
      }
      auto v = j.get<long long>();
      if (v < std::numeric_limits<Elem>::min()
          || v > std::numeric_limits<Elem>::max()) {
        throw_range(std::string(what) + " entry " + std::to_string(v)
                    + " out of range");
      }
      return static_cast<Elem>(v);
    }

    // Checks the optional "n" against the size found in the data.
    void check_n(Json const& doc, std::size_t n) {
      if (doc.contains("n")) {
        Elem m = elem_from_json(doc["n"], "n");
        if (m < 0 || static_cast<std::size_t>(m) != n) {
          throw_shape("\"n\" is " + std::to_string(m) + " but the tables have "
                      + std::to_string(n) + " rows");
        }
      }
    }

    void check_version(Json const& doc) {
      if (!doc.is_object()) {
        format_error("document must be a JSON object");
      }
      if (doc.contains("format_version")
          && doc["format_version"] != Json(format_version)) {
        format_error("unsupported format_version "
                     + doc["format_version"].dump());
      }
    }

    Word cube_from_json(Json const& j, std::size_t n, char const* what) {
      std::size_t n3 = n * n * n;
      if (!j.is_array() || j.size() != n3) {
        throw_shape(std::string(what) + " needs " + std::to_string(n3)
                    + " entries");
      }
      Word codes;
      codes.reserve(n3);
      for (Json const& e : j) {
        if (e.is_array()) {
          Word t = word_from_json(e, what);
          if (t.size() != 3) {
            throw_shape(std::string(what) + " entries must be triples");
          }
          auto ni = static_cast<Elem>(n);
          for (Elem x : t) {
            if (x < 0 || x >= ni) {
              throw_range(std::string(what) + " entry out of range");
            }
          }
          codes.push_back((t[0] * ni + t[1]) * ni + t[2]);
        } else {
          codes.push_back(elem_from_json(e, what));
        }
      }
      return codes;
    }

    Json cube_to_json(CubeMap const& m) {
      Json out = Json::array();
      for (Elem c : m.codes()) {
        Triple t = m.decode(c);
        out.push_back({t.a, t.b, t.c});
      }
      return out;
    }

    Json table_json(Table const& t) {
      Json out = Json::array();
      for (Word const& row : t) {
        out.push_back(row);
      }
      return out;
    }
  }  // namespace

  Json read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("FileError", "cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return Json::parse(ss.str());
    } catch (Json::parse_error const& e) {
      format_error(path + ": " + e.what());
    }
  }

  std::string dump(Json const& j) {
    return j.dump();
  }

  Json field(Json const& doc, char const* key) {
    check_version(doc);
    if (!doc.contains(key)) {
      format_error(std::string("missing field \"") + key + "\"");
    }
    return doc[key];
  }

  Word word_from_json(Json const& j, char const* what) {
    if (!j.is_array()) {
      format_error(std::string(what) + " must be an array");
    }
    Word w;
    w.reserve(j.size());
    for (Json const& e : j) {
      w.push_back(elem_from_json(e, what));
    }
    return w;
  }

  Table table_from_json(Json const& j, char const* what) {
    if (!j.is_array()) {
      format_error(std::string(what) + " must be an array of rows");
    }
    Table t;
    t.reserve(j.size());
    for (Json const& row : j) {
      t.push_back(word_from_json(row, what));
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Solutions, maps, shelves
  ////////////////////////////////////////////////////////////////////////

  SquareMap solution_map_from_json(Json const& doc) {
    if (is_shelf(doc)) {
      return rack_solution(shelf_from_json(doc)).as_map();
    }
    Table sigma = table_from_json(field(doc, "sigma"), "sigma");
    Table rho   = table_from_json(field(doc, "rho"), "rho");
    std::size_t n = sigma.size();
    check_n(doc, n);
    if (rho.size() != n) {
      throw_shape("sigma and rho have different sizes");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (sigma[i].size() != n || rho[i].size() != n) {
        throw_shape("tables must be n x n");
      }
    }
    auto ni = static_cast<Elem>(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (sigma[i][j] < 0 || sigma[i][j] >= ni || rho[i][j] < 0
            || rho[i][j] >= ni) {
          throw_range("table entry out of range");
        }
      }
    }
    return SquareMap::from_function(n, [&](Elem a, Elem b) {
      return Pair{sigma[a][b], rho[b][a]};
    });
  }

  BraidedSet solution_from_json(Json const& doc) {
    if (is_shelf(doc)) {
      return rack_solution(shelf_from_json(doc));
    }
    Table sigma = table_from_json(field(doc, "sigma"), "sigma");
    Table rho   = table_from_json(field(doc, "rho"), "rho");
    check_n(doc, sigma.size());
    return BraidedSet::validate(sigma, rho);
  }

  Json to_json(BraidedSet const& bs) {
    return versioned({{"n", bs.size()},
                      {"sigma", table_json(bs.sigma_table())},
                      {"rho", table_json(bs.rho_table())}});
  }

  Json solution_to_json(SquareMap const& r) {
    std::size_t n = r.size();
    Table       sigma(n, Word(n)), rho(n, Word(n));
    for (Elem a = 0; a < static_cast<Elem>(n); ++a) {
      for (Elem b = 0; b < static_cast<Elem>(n); ++b) {
        Pair p      = r(a, b);
        sigma[a][b] = p.first;
        rho[b][a]   = p.second;
      }
    }
    return versioned({{"n", n}, {"sigma", table_json(sigma)},
                      {"rho", table_json(rho)}});
  }

  bool is_shelf(Json const& doc) {
    return doc.is_object() && doc.contains("tri") && !doc.contains("sigma");
  }

  FiniteMap map_from_json(Json const& doc) {
    return FiniteMap(word_from_json(field(doc, "k"), "k"));
  }

  Json to_json(FiniteMap const& k) {
    return versioned({{"k", k.images()}});
  }

  Shelf shelf_from_json(Json const& doc) {
    Table tri = table_from_json(field(doc, "tri"), "tri");
    check_n(doc, tri.size());
    return Shelf::validate(tri);
  }

  ////////////////////////////////////////////////////////////////////////
  // Twists
  ////////////////////////////////////////////////////////////////////////

  TwistDatum twist_from_json(Json const& doc) {
    Json f = field(doc, "F");
    if (!f.is_array()) {
      format_error("F must be an array of rows");
    }
    std::size_t n = f.size();
    check_n(doc, n);
    auto ni = static_cast<Elem>(n);
    Word codes;
    codes.reserve(n * n);
    for (Json const& row : f) {
      if (!row.is_array() || row.size() != n) {
        throw_shape("F must be n x n");
      }
      for (Json const& e : row) {
        Word p = word_from_json(e, "F");
        if (p.size() != 2) {
          throw_shape("F entries must be pairs");
        }
        if (p[0] < 0 || p[0] >= ni || p[1] < 0 || p[1] >= ni) {
          throw_range("F entry out of range");
        }
        codes.push_back(p[0] * ni + p[1]);
      }
    }
    return {SquareMap(n, std::move(codes)),
            CubeMap(n, cube_from_json(field(doc, "Phi"), n, "Phi")),
            CubeMap(n, cube_from_json(field(doc, "Psi"), n, "Psi"))};
  }

  Json to_json(TwistDatum const& t) {
    std::size_t n = t.size();
    Json        f = Json::array();
    for (Elem a = 0; a < static_cast<Elem>(n); ++a) {
      Json row = Json::array();
      for (Elem b = 0; b < static_cast<Elem>(n); ++b) {
        Pair p = t.F(a, b);
        row.push_back({p.first, p.second});
      }
      f.push_back(std::move(row));
    }
    return versioned({{"n", n},
                      {"F", std::move(f)},
                      {"Phi", cube_to_json(t.Phi)},
                      {"Psi", cube_to_json(t.Psi)}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups and skew braces
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup group_from_json(Json const& doc) {
    Table mul = table_from_json(field(doc, "mul"), "mul");
    check_n(doc, mul.size());
    if (doc.contains("identity")) {
      return FiniteGroup::validate(mul, elem_from_json(doc["identity"],
                                                       "identity"));
    }
    return FiniteGroup::validate(mul);
  }

  Json to_json(FiniteGroup const& g) {
    return versioned({{"n", g.size()},
                      {"mul", table_json(g.table())},
                      {"identity", g.identity()}});
  }

  SkewBrace brace_from_json(Json const& doc) {
    Table add = table_from_json(field(doc, "add"), "add");
    Table mul = table_from_json(field(doc, "mul"), "mul");
    check_n(doc, add.size());
    return SkewBrace::validate(add, mul);
  }

  Json to_json(SkewBrace const& sb) {
    return versioned({{"n", sb.size()},
                      {"add", table_json(sb.additive().table())},
                      {"mul", table_json(sb.multiplicative().table())}});
  }

  std::vector<FiniteMap> family_from_json(Json const& doc) {
    Table                  maps = table_from_json(field(doc, "maps"), "maps");
    std::vector<FiniteMap> out;
    for (Word const& w : maps) {
      if (w.size() != maps.size()) {
        throw_shape("a family on n elements needs n maps of size n");
      }
      out.emplace_back(w);
    }
    return out;
  }

  Json family_to_json(std::vector<FiniteMap> const& fam) {
    Json maps = Json::array();
    for (FiniteMap const& f : fam) {
      maps.push_back(f.images());
    }
    return versioned({{"maps", std::move(maps)}});
  }

  Json to_json(GradedComponent const& c) {
    Json classes = Json::array();
    for (auto const& cls : c.classes()) {
      Json words = Json::array();
      for (Word const& w : cls) {
        words.push_back(w);
      }
      classes.push_back(std::move(words));
    }
    return versioned({{"degree", c.degree()}, {"classes", std::move(classes)}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  Json to_json(Report const& r) {
    if (r.ok) {
      return {{"ok", true}};
    }
    return {{"ok", false}, {"axiom", r.axiom}, {"witness", r.witness}};
  }

  Json to_json(Error const& e) {
    std::string msg = e.what();
    if (msg.rfind(e.kind() + ": ", 0) == 0) {
      msg.erase(0, e.kind().size() + 2);
    }
    return {{"kind", e.kind()}, {"message", msg}, {"witness", e.witness()}};
  }

  Json versioned(Json j) {
    j["format_version"] = format_version;
    return j;
  }

}  // namespace reflectwist::io
