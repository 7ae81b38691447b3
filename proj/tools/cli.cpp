#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "origami/cover.hpp"
#include "origami/error.hpp"
#include "origami/moduli.hpp"
#include "origami/origami.hpp"
#include "origami/svg.hpp"
#include "origami/veech.hpp"

namespace origami::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kConvention = "(p*q)(i) = p(q(i)); words in T,S,t,s act letter by letter from the left";

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IoError", what) {}
};

std::string read_input(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw IoError("cannot read " + arg.substr(1));
  std::ostringstream s;
  s << in.rdbuf();
  std::string text = s.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

void write_atomically(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << data;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path);
  }
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
  return s.str();
}

std::vector<std::string> words(const std::vector<GroupWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

json matrix_json(const Matrix2& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

std::vector<std::string> rationals(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

std::vector<std::vector<std::size_t>> one_based(std::vector<std::vector<std::size_t>> v) {
  for (auto& row : v) {
    for (auto& x : row) ++x;
  }
  return v;
}

Mode parse_mode(const std::string& s) { return s == "sl" ? Mode::linear : Mode::projective; }

// Result of one command: a JSON document and a text rendering.
struct Output {
  json doc;
  std::ostringstream text;
  std::string raw;  ///< used verbatim in text mode when set (SVG)
};

json origami_json(const Origami& o) {
  json j;
  j["text"] = to_string(o);
  j["degree"] = o.degree();
  j["mu"] = to_string(o.mu());
  j["nu"] = to_string(o.nu());
  return j;
}

void cmd_info(const Origami& o, Output& r) {
  const SingularityProfile p = singularity_profile(o);
  const bool ab = is_abelian(o);
  const XYE t = to_xye(o);
  r.doc["origami"] = origami_json(o);
  r.doc["abelian"] = ab;
  r.doc["genus"] = p.genus;
  r.doc["orders"] = p.orders;
  r.doc["valency"] = p.valency4;
  r.doc["poles"] = p.poles;
  r.doc["xye"] = to_string(t);
  r.doc["canonical"] = to_string(canonical_form(o));
  r.doc["invariants"] = {{"connected", o.connected()},
                         {"sum_orders_equals_4g_minus_4", true},
                         {"sum_valency_equals_2d", true}};
  r.text << "degree: " << o.degree() << "\n"
         << "abelian: " << (ab ? "true" : "false") << "\n"
         << "genus: " << p.genus << "\n"
         << "orders: " << join(p.orders) << "\n"
         << "valency: " << join(p.valency4) << "\n"
         << "poles: " << p.poles << "\n"
         << "origami: " << to_string(o) << "\n"
         << "xye: " << to_string(t) << "\n"
         << "canonical: " << to_string(canonical_form(o)) << "\n";
}

void cmd_double_cover(const Origami& o, Output& r) {
  const DoubleCover c = double_cover(o);
  r.doc["origami"] = origami_json(o);
  r.doc["sheets"] = c.sheet_count();
  r.doc["sheet_numbering"] = "sheet 2l-1 is square l upright, sheet 2l is square l turned";
  r.doc["X"] = to_string(c.X);
  r.doc["Y"] = to_string(c.Y);
  r.doc["n"] = to_string(c.n);
  r.doc["components"] = c.components();
  r.doc["abelian"] = c.components() > 1;
  r.text << "sheets: " << c.sheet_count() << " (sheet 2l-1 = square l upright, 2l = square l turned)\n"
         << "X: " << to_string(c.X) << "\n"
         << "Y: " << to_string(c.Y) << "\n"
         << "n: " << to_string(c.n) << "\n"
         << "components: " << c.components() << "\n";
}

void cmd_isomorphic(const Origami& a, const Origami& b, Output& r) {
  const auto w = is_equivalent(a, b);
  r.doc["equivalent"] = w.has_value();
  r.doc["witness"] = w ? json(to_string(*w)) : json(nullptr);
  r.text << "equivalent: " << (w ? "true" : "false") << "\n";
  if (w) r.text << "witness: " << to_string(*w) << "\n";
}

void cmd_veech(const Origami& o, Mode mode, Output& r, bool with_orbit) {
  const VeechResult v = orbit_stabilizer(o, mode);
  r.doc["mode"] = mode == Mode::linear ? "sl" : "psl";
  r.doc["index"] = v.index;
  r.doc["coset_reps"] = words(v.coset_reps);
  r.doc["stabilizer_gens"] = words(v.stabilizer_gens);
  if (mode == Mode::linear) {
    json ms = json::array();
    for (const auto& m : v.stabilizer_matrices) ms.push_back(matrix_json(m));
    r.doc["stabilizer_matrices"] = ms;
  }
  r.text << "mode: " << (mode == Mode::linear ? "sl" : "psl") << "\n"
         << "index: " << v.index << "\n"
         << "cosets: " << join(words(v.coset_reps), " ") << "\n"
         << "stabilizer: " << join(words(v.stabilizer_gens), " ") << "\n";
  if (mode == Mode::linear) {
    std::vector<std::string> ms;
    for (const auto& m : v.stabilizer_matrices) ms.push_back(to_string(m));
    r.text << "matrices: " << join(ms, " ") << "\n";
  }
  if (with_orbit) {
    json orb = json::array();
    for (std::size_t i = 0; i < v.orbit.size(); ++i) {
      orb.push_back({{"word", to_string(v.coset_reps[i])}, {"origami", to_string(v.orbit[i])}});
      r.text << to_string(v.coset_reps[i]) << "\t" << to_string(v.orbit[i]) << "\n";
    }
    r.doc["orbit"] = orb;
  }
}

void cmd_contains(const Origami& o, const Matrix2& m, Mode mode, Output& r) {
  const GroupWord w = matrix_to_word(m, mode);
  const bool in = contains(o, m, mode);
  r.doc["mode"] = mode == Mode::linear ? "sl" : "psl";
  r.doc["matrix"] = matrix_json(m);
  r.doc["word"] = to_string(w);
  r.doc["contains"] = in;
  r.text << "word: " << to_string(w) << "\n"
         << "contains: " << (in ? "true" : "false") << "\n";
}

void cmd_moduli(const Origami& o, Output& r) {
  const ModuliSystem s = moduli_system(o);
  std::vector<Perm> plain;
  for (const auto& g : s.C_O_gens) plain.push_back(g.perm());
  const std::size_t order = group_elements(plain, 2 * o.degree()).size();
  json kernel = json::array();
  std::vector<std::string> ktext;
  for (const auto& v : s.kernel_basis) {
    std::vector<std::string> e;
    for (const auto& x : v) e.push_back(x.str());
    kernel.push_back(e);
    ktext.push_back("(" + join(e) + ")");
  }
  std::vector<std::string> gens;
  for (const auto& g : s.C_O_gens) gens.push_back(to_string(g));
  r.doc["modulus_convention"] = "M = height / width";
  r.doc["loops"] = s.basis.loops.size();
  r.doc["A"] = s.A;
  r.doc["kernel_dimension"] = s.kernel_basis.size();
  r.doc["kernel_basis"] = kernel;
  r.doc["C_O_generators"] = gens;
  r.doc["C_O_order"] = order;
  r.text << "modulus convention: M = height / width\n"
         << "loops: " << s.basis.loops.size() << "\n";
  for (const auto& row : s.A) r.text << "A: " << join(row, " ") << "\n";
  r.text << "kernel dimension: " << s.kernel_basis.size() << "\n"
         << "kernel basis: " << join(ktext, " ") << "\n"
         << "C_O order: " << order << "\n"
         << "C_O generators: " << join(gens, " ") << "\n";
}

void cmd_check_moduli(const Origami& o, const ModuliList& m, Output& r) {
  const LoopBasis b = loop_basis(o);
  std::vector<std::string> k;
  for (const Loop& l : b.loops) k.push_back(to_string(K_eval(o, l, m)));
  const bool ok = is_compatible(o, m);
  r.doc["moduli"] = to_string(m);
  r.doc["compatible"] = ok;
  r.doc["K_on_loops"] = k;
  r.text << "compatible: " << (ok ? "true" : "false") << "\n"
         << "K on loops: " << join(k) << "\n";
}

void cmd_geometry(const Origami& o, const ModuliList& m, const Directions& dirs, Output& r) {
  const GeometryRealization g = realize_geometry(o, m, dirs);
  r.doc["modulus_convention"] = "M = height / width";
  r.doc["directions_over_pi"] = {to_string(dirs.theta1), to_string(dirs.theta2)};
  r.doc["w"] = rationals(g.w);
  r.doc["h"] = rationals(g.h);
  r.doc["area"] = to_string(g.area);
  r.doc["horizontal_cylinders"] = one_based(g.horizontal_cylinders);
  r.doc["vertical_cylinders"] = one_based(g.vertical_cylinders);
  r.text << "w: " << join(rationals(g.w)) << "\n"
         << "h: " << join(rationals(g.h)) << "\n"
         << "area: " << to_string(g.area) << "\n";
}

void cmd_cylinders(const Origami& o, const ModuliList& m, Direction dir, Output& r) {
  const auto c = rationals(cylinder_moduli(o, m, dir));
  r.doc["direction"] = dir == Direction::horizontal ? "horizontal" : "vertical";
  r.doc["moduli"] = c;
  r.text << "cylinder moduli: " << join(c) << "\n";
}

int cmd_cover_veech(const MonodromyTuple& t, Output& r) {
  const BaseMarking& b = marking_D();
  const auto v = validate(b, t);
  json viol = json::array();
  for (const auto& x : v) {
    viol.push_back({{"kind", x.kind}, {"detail", x.detail}});
    r.text << "violation: " << x.kind << ": " << x.detail << "\n";
  }
  r.doc["base"] = "D";
  r.doc["tuple"] = to_string(t);
  r.doc["valid"] = v.empty();
  r.doc["violations"] = viol;
  if (!v.empty()) return 1;
  const CoverVeechResult c = cover_veech_group(b, t);
  r.doc["index"] = c.index;
  r.doc["coset_reps"] = words(c.coset_reps);
  r.doc["stabilizer_gens"] = words(c.stabilizer_gens);
  r.text << "valid: true\n"
         << "index: " << c.index << "\n"
         << "cosets: " << join(words(c.coset_reps), " ") << "\n"
         << "stabilizer: " << join(words(c.stabilizer_gens), " ") << "\n";
  return 0;
}

void cmd_enumerate(std::size_t d, unsigned threads, Output& r) {
  const auto all = enumerate(d, threads);
  json list = json::array();
  std::size_t abelian = 0;
  for (const Origami& o : all) {
    const bool ab = is_abelian(o);
    abelian += ab;
    list.push_back({{"origami", to_string(o)}, {"abelian", ab}});
    r.text << to_string(o) << (ab ? "\tabelian" : "") << "\n";
  }
  r.doc["degree"] = d;
  r.doc["count"] = all.size();
  r.doc["abelian_count"] = abelian;
  r.doc["origamis"] = list;
  r.text << "# count: " << all.size() << ", abelian: " << abelian << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Origamis: normal forms, Veech groups, moduli and covers", "origami"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string output_path;
  app.add_flag("--json", as_json, "emit a single JSON document");
  app.add_option("-o,--output", output_path, "write the result to a file (atomically)");

  std::string a, b, mode_s = "psl", dirs_s = "0,1/2", direction_s = "horizontal";
  std::size_t degree = 0;
  unsigned threads = 1;
  bool dessin_view = false;

  auto origami_arg = [&](CLI::App* sc, std::string& dst, const char* name = "origami") {
    sc->add_option(name, dst, "origami text or @file")->required();
  };
  auto mode_opt = [&](CLI::App* sc) {
    sc->add_option("--mode", mode_s, "psl (default) or sl")->check(CLI::IsMember({"psl", "sl"}));
  };

  auto* info = app.add_subcommand("info", "degree, abelian flag, genus, orders, valency list");
  origami_arg(info, a);
  auto* dc = app.add_subcommand("double-cover", "canonical double cover");
  origami_arg(dc, a);
  auto* iso = app.add_subcommand("isomorphic", "equivalence test with witness");
  origami_arg(iso, a, "first");
  origami_arg(iso, b, "second");
  auto* veech = app.add_subcommand("veech", "Veech group as a stabilizer");
  origami_arg(veech, a);
  mode_opt(veech);
  auto* orbit = app.add_subcommand("orbit", "orbit under T and S with coset words");
  origami_arg(orbit, a);
  mode_opt(orbit);
  auto* cont = app.add_subcommand("contains", "membership of an integer matrix in the Veech group");
  origami_arg(cont, a);
  cont->add_option("matrix", b, "[[a,b],[c,d]]")->required();
  mode_opt(cont);
  auto* mod = app.add_subcommand("moduli", "exponent matrix, kernel and automorphisms");
  origami_arg(mod, a);
  auto* chk = app.add_subcommand("check-moduli", "compatibility of a moduli list");
  origami_arg(chk, a);
  chk->add_option("moduli", b, "comma-separated rationals")->required();
  auto* geo = app.add_subcommand("geometry", "widths, heights and area of a compatible list");
  origami_arg(geo, a);
  geo->add_option("moduli", b, "comma-separated rationals")->required();
  geo->add_option("--dirs", dirs_s, "direction pair in units of pi, e.g. 0,1/2");
  auto* cyl = app.add_subcommand("cylinders", "cylinder moduli in one direction");
  origami_arg(cyl, a);
  cyl->add_option("moduli", b, "comma-separated rationals")->required();
  cyl->add_option("--direction", direction_s, "horizontal or vertical")
      ->check(CLI::IsMember({"horizontal", "vertical"}));
  auto* cov = app.add_subcommand("cover-veech", "Veech group of a cover of D given by its monodromy");
  cov->add_option("tuple", a, "N=..; tau0=..; ...; tau6=.. or @file")->required();
  auto* en = app.add_subcommand("enumerate", "all origamis of a degree up to equivalence");
  en->add_option("degree", degree, "number of squares")->required()->check(CLI::Range(1, 8));
  en->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));
  auto* ren = app.add_subcommand("render", "SVG drawing");
  origami_arg(ren, a);
  ren->add_flag("--dessin", dessin_view, "draw the dessin instead of the squares");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Output r;
  CLI::App* sc = app.get_subcommands().front();
  r.doc["schema"] = 1;
  r.doc["command"] = sc->get_name();
  r.doc["convention"] = kConvention;
  int status = 0;
  try {
    const Mode mode = parse_mode(mode_s);
    if (sc == info) {
      cmd_info(parse_origami(read_input(a)), r);
    } else if (sc == dc) {
      cmd_double_cover(parse_origami(read_input(a)), r);
    } else if (sc == iso) {
      cmd_isomorphic(parse_origami(read_input(a)), parse_origami(read_input(b)), r);
    } else if (sc == veech) {
      cmd_veech(parse_origami(read_input(a)), mode, r, false);
    } else if (sc == orbit) {
      cmd_veech(parse_origami(read_input(a)), mode, r, true);
    } else if (sc == cont) {
      cmd_contains(parse_origami(read_input(a)), parse_matrix(read_input(b)), mode, r);
    } else if (sc == mod) {
      cmd_moduli(parse_origami(read_input(a)), r);
    } else if (sc == chk) {
      cmd_check_moduli(parse_origami(read_input(a)), parse_moduli(read_input(b)), r);
    } else if (sc == geo) {
      cmd_geometry(parse_origami(read_input(a)), parse_moduli(read_input(b)), parse_directions(dirs_s), r);
    } else if (sc == cyl) {
      cmd_cylinders(parse_origami(read_input(a)), parse_moduli(read_input(b)),
                    direction_s == "vertical" ? Direction::vertical : Direction::horizontal, r);
    } else if (sc == cov) {
      status = cmd_cover_veech(parse_tuple(read_input(a)), r);
    } else if (sc == en) {
      cmd_enumerate(degree, threads, r);
    } else if (sc == ren) {
      const Origami o = parse_origami(read_input(a));
      r.raw = dessin_view ? render_dessin_svg(o) : render_svg(o);
      r.doc["svg"] = r.raw;
    }
  } catch (const Error& e) {
    if (as_json) {
      json j;
      j["schema"] = 1;
      j["command"] = sc->get_name();
      j["error"] = {{"kind", e.kind()}, {"message", e.what()}};
      out << j.dump(2) << "\n";
    } else {
      err << "error: " << e.kind() << ": " << e.what() << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  std::string payload;
  if (as_json) {
    payload = r.doc.dump(2) + "\n";
  } else if (!r.raw.empty()) {
    payload = r.raw;
  } else {
    payload = std::string("# composition: ") + kConvention + "\n" + r.text.str();
  }
  if (!output_path.empty()) {
    try {
      write_atomically(output_path, payload);
    } catch (const Error& e) {
      err << "error: " << e.kind() << ": " << e.what() << "\n";
      return 1;
    }
  } else {
    out << payload;
  }
  return status;
}

}  // namespace origami::cli
