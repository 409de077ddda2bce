// Command-line front end: `tlg <group> <command> [options]`.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlg/braided.hpp"
#include "tlg/case_studies.hpp"
#include "tlg/detail/cursor.hpp"
#include "tlg/lodha_moore.hpp"
#include "tlg/reidemeister.hpp"
#include "tlg/sigma.hpp"
#include "tlg/tecnico.hpp"
#include "tlg/thompson.hpp"

using json = nlohmann::ordered_json;
using namespace tlg;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

struct Outcome {
  json data;
  std::string text;
  int code = 0;
};

using Action = std::function<Outcome()>;

std::string big(const BigInt& x) { return x.get_str(); }

json vec_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) {
      out.push_back(x.get_si());
    } else {
      out.push_back(big(x));
    }
  }
  return out;
}

std::string vec_text(const std::vector<BigInt>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + big(v[i]);
  return out + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Perm parse_perm(const std::string& text) {
  detail::Cursor c(text);
  Perm p;
  c.expect('[');
  if (!c.accept(']')) {
    do {
      p.push_back(static_cast<int>(c.integer()));
    } while (c.accept(','));
    c.expect(']');
  }
  c.expect_end();
  return p;
}

std::vector<BigInt> parse_list(const std::string& text) {
  std::vector<BigInt> out;
  if (text.empty()) return out;
  detail::Cursor c(text);
  do {
    out.push_back(c.integer());
  } while (c.accept(','));
  c.expect_end();
  return out;
}

Outcome report_outcome(const CaseReport& r) {
  Outcome o;
  o.data["title"] = r.title;
  o.data["passed"] = r.passed();
  o.data["checks"] = json::array();
  o.text = r.title + "\n";
  for (const auto& c : r.checks) {
    o.data["checks"].push_back(
        {{"name", c.name}, {"kind", c.kind}, {"status", to_string(c.status)}, {"detail", c.detail}});
    o.text += "  [" + to_string(c.status) + "] " + c.name + " (" + c.kind + ")";
    if (!c.detail.empty()) o.text += ": " + c.detail;
    o.text += "\n";
  }
  o.text += r.passed() ? "all checks passed" : "some checks FAILED";
  o.code = r.passed() ? 0 : 1;
  return o;
}

Outcome simple(const std::string& key, const std::string& value) {
  Outcome o;
  o.data[key] = value;
  o.text = value;
  return o;
}

// --- pl ---

void add_pl(CLI::App& app, Action& action) {
  auto* pl = app.add_subcommand("pl", "piecewise-linear maps of [0, ell]");
  pl->require_subcommand(1);
  static std::string f, g, spec, slopes, x;

  auto* compose_cmd = pl->add_subcommand("compose", "f o g");
  compose_cmd->add_option("--f", f, "map literal")->required();
  compose_cmd->add_option("--g", g, "map literal")->required();
  compose_cmd->callback([&] {
    action = [] { return simple("map", compose(PLMap::parse(f), PLMap::parse(g)).to_string()); };
  });

  auto* invert_cmd = pl->add_subcommand("invert", "inverse map");
  invert_cmd->add_option("--f", f, "map literal")->required();
  invert_cmd->callback([&] { action = [] { return simple("map", invert(PLMap::parse(f)).to_string()); }; });

  auto* member = pl->add_subcommand("member", "membership in G([0,ell]; A, P)");
  member->add_option("--spec", spec, "e.g. \"1 Z[1/2] <2>\"")->required();
  member->add_option("--map", f, "map literal")->required();
  member->callback([&] {
    action = [] {
      auto s = BieriStrebelSpec::parse(spec);
      s.validate();
      auto r = is_member(PLMap::parse(f), s);
      Outcome o;
      o.data["member"] = r.member;
      o.data["violations"] = r.violations;
      o.text = r.member ? "true" : "false";
      for (const auto& v : r.violations) o.text += "\n  " + v;
      return o;
    };
  });

  auto* chr = pl->add_subcommand("char", "exponents of the endpoint slopes");
  chr->add_option("--slopes", slopes, "slope group, e.g. \"<2>\"")->default_val("<2>");
  chr->add_option("--map", f, "map literal")->required();
  chr->callback([&] {
    action = [] {
      auto c = endpoint_characters(PLMap::parse(f), SlopeGroupSpec::parse(slopes));
      Outcome o;
      o.data["left"] = c.left;
      o.data["right"] = c.right;
      auto show = [](const std::vector<std::int64_t>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
      };
      o.text = "left " + show(c.left) + " right " + show(c.right);
      return o;
    };
  });

  auto* supp = pl->add_subcommand("support", "maximal open intervals moved by the map");
  supp->add_option("--map", f, "map literal")->required();
  supp->callback([&] {
    action = [] {
      Outcome o;
      o.data["support"] = json::array();
      for (const auto& i : support(PLMap::parse(f))) {
        o.data["support"].push_back({i.lo.to_string(), i.hi.to_string()});
        o.text += (o.text.empty() ? "" : " ") + ("(" + i.lo.to_string() + ", " + i.hi.to_string() + ")");
      }
      if (o.text.empty()) o.text = "empty";
      return o;
    };
  });

  auto* eval = pl->add_subcommand("eval", "value at a point");
  eval->add_option("--map", f, "map literal")->required();
  eval->add_option("--x", x, "exact number")->required();
  eval->callback([&] {
    action = [] { return simple("value", PLMap::parse(f).evaluate(ExactNumber::parse(x)).to_string()); };
  });
}

// --- f ---

Outcome tree_pair_outcome(const TreePair& d) {
  Outcome o;
  TreePair r = reduce(d);
  o.data["pair"] = r.to_string();
  o.data["pl"] = to_pl(r).to_string();
  o.text = r.to_string() + "\n" + to_pl(r).to_string();
  return o;
}

void add_f(CLI::App& app, Action& action) {
  auto* f = app.add_subcommand("f", "Thompson's group F as tree-pair diagrams");
  f->require_subcommand(1);
  static std::string a, b, map;
  static unsigned n = 0;

  auto* mul = f->add_subcommand("multiply", "a * b (a acts after b)");
  mul->add_option("--a", a, "minus|plus")->required();
  mul->add_option("--b", b, "minus|plus")->required();
  mul->callback([&] { action = [] { return tree_pair_outcome(multiply(TreePair::parse(a), TreePair::parse(b))); }; });

  auto* inv = f->add_subcommand("inverse", "inverse diagram");
  inv->add_option("--a", a, "minus|plus")->required();
  inv->callback([&] { action = [] { return tree_pair_outcome(inverse(TreePair::parse(a))); }; });

  auto* red = f->add_subcommand("reduce", "reduced representative");
  red->add_option("--a", a, "minus|plus")->required();
  red->callback([&] { action = [] { return tree_pair_outcome(TreePair::parse(a)); }; });

  auto* topl = f->add_subcommand("to-pl", "the PL map of a diagram");
  topl->add_option("--a", a, "minus|plus")->required();
  topl->callback([&] { action = [] { return simple("pl", to_pl(TreePair::parse(a)).to_string()); }; });

  auto* frompl = f->add_subcommand("from-pl", "the reduced diagram of a dyadic PL map");
  frompl->add_option("--map", map, "map literal")->required();
  frompl->callback([&] { action = [] { return tree_pair_outcome(from_pl(PLMap::parse(map))); }; });

  auto* chr = f->add_subcommand("char", "characters phi0, phi1");
  chr->add_option("--a", a, "minus|plus")->required();
  chr->callback([&] {
    action = [] {
      auto c = f_characters(TreePair::parse(a));
      Outcome o;
      o.data["phi0"] = c.left;
      o.data["phi1"] = c.right;
      o.text = "phi0 " + std::to_string(c.left) + " phi1 " + std::to_string(c.right);
      return o;
    };
  });

  auto* gen = f->add_subcommand("gen", "the generator x_n");
  gen->add_option("--n", n, "index")->required();
  gen->callback([&] { action = [] { return tree_pair_outcome(TreePair::x(n)); }; });
}

// --- fbr ---

Outcome diagram_outcome(const BraidedDiagram& d) {
  Outcome o;
  o.data["diagram"] = d.to_string();
  o.data["pure"] = d.is_pure();
  o.text = d.to_string() + (d.is_pure() ? "  (pure)" : "");
  return o;
}

void add_fbr(CLI::App& app, Action& action) {
  auto* fbr = app.add_subcommand("fbr", "braided Thompson groups");
  fbr->require_subcommand(1);
  static std::string a, b, u, v;
  static int strands = 0;
  static std::size_t leaf = 0;

  auto* mul = fbr->add_subcommand("multiply", "a * b");
  mul->add_option("--a", a, "minus | braid | plus")->required();
  mul->add_option("--b", b, "minus | braid | plus")->required();
  mul->callback([&] {
    action = [] { return diagram_outcome(multiply(BraidedDiagram::parse(a), BraidedDiagram::parse(b))); };
  });

  auto* inv = fbr->add_subcommand("inverse", "inverse diagram");
  inv->add_option("--a", a, "minus | braid | plus")->required();
  inv->callback([&] { action = [] { return diagram_outcome(inverse(BraidedDiagram::parse(a))); }; });

  auto* exp = fbr->add_subcommand("expand", "expansion at a minus leaf");
  exp->add_option("--a", a, "minus | braid | plus")->required();
  exp->add_option("--leaf", leaf, "0-based leaf")->required();
  exp->callback([&] { action = [] { return diagram_outcome(expansion(BraidedDiagram::parse(a), leaf)); }; });

  auto* eq = fbr->add_subcommand("equal", "equivalence of diagrams");
  eq->add_option("--a", a, "minus | braid | plus")->required();
  eq->add_option("--b", b, "minus | braid | plus")->required();
  eq->callback([&] {
    action = [] {
      bool e = diagram_equal(BraidedDiagram::parse(a), BraidedDiagram::parse(b));
      Outcome o;
      o.data["equal"] = e;
      o.text = e ? "true" : "false";
      return o;
    };
  });

  auto* beq = fbr->add_subcommand("braid-equal", "braid word problem");
  beq->add_option("--u", u, "braid word, e.g. \"s1 s2 s1\"")->required();
  beq->add_option("--v", v, "braid word")->required();
  beq->add_option("--strands", strands, "number of strands")->required();
  beq->callback([&] {
    action = [] {
      auto bu = BraidWord::parse(u, strands), bv = BraidWord::parse(v, strands);
      bool e = braid_equal(bu, bv);
      Outcome o;
      o.data["equal"] = e;
      o.data["reduced"] = handle_reduce(bu * bv.inverse()).to_string();
      o.text = e ? "true" : "false";
      return o;
    };
  });

  auto* chr = fbr->add_subcommand("char", "characters phi0, phi1");
  chr->add_option("--a", a, "minus | braid | plus")->required();
  chr->callback([&] {
    action = [] {
      auto c = phi_characters(BraidedDiagram::parse(a));
      Outcome o;
      o.data["phi0"] = c.phi0;
      o.data["phi1"] = c.phi1;
      o.text = "phi0 " + std::to_string(c.phi0) + " phi1 " + std::to_string(c.phi1);
      return o;
    };
  });

  auto* gens = fbr->add_subcommand("generators", "the ten generators of F_br");
  gens->callback([&] {
    action = [] {
      Outcome o;
      o.data["generators"] = json::array();
      for (const auto& g : fbr_generators()) {
        auto c = phi_characters(g.diagram);
        o.data["generators"].push_back({{"name", g.name},
                                        {"diagram", g.diagram.to_string()},
                                        {"pure", g.diagram.is_pure()},
                                        {"phi0", c.phi0},
                                        {"phi1", c.phi1}});
        o.text += g.name + "  " + g.diagram.to_string() + (g.diagram.is_pure() ? "  pure" : "  NOT pure") + "  (" +
                  std::to_string(c.phi0) + "," + std::to_string(c.phi1) + ")\n";
      }
      if (!o.text.empty()) o.text.pop_back();
      return o;
    };
  });
}

// --- lm ---

void add_lm(CLI::App& app, Action& action) {
  auto* lm = app.add_subcommand("lm", "Lodha-Moore groups");
  lm->require_subcommand(1);
  static std::string variant = "yGy", word, u, v, input, s, t;
  static std::size_t depth = 12, bits = 0;
  lm->add_option("--variant", variant, "G, yG, Gy or yGy")->default_val("yGy");

  auto* eval = lm->add_subcommand("eval", "image of an eventually periodic sequence");
  eval->add_option("--word", word, "e.g. \"x(011) y(01)' x()\"")->required();
  eval->add_option("--input", input, "e.g. \"01(10)\"")->required();
  eval->add_option("--bits", bits, "print only this many output bits (0: exact image)");
  eval->callback([&] {
    action = [] {
      LMWord w = LMWord::parse(word, parse_variant(variant));
      auto in = EventuallyPeriodicSeq::parse(input);
      Outcome o;
      if (bits > 0) {
        std::string out;
        for (int b : evaluate_prefix(w, in, bits)) out += static_cast<char>('0' + b);
        o.data["prefix"] = out;
        o.text = out;
      } else {
        o.data["image"] = apply(w, in).to_string();
        o.text = apply(w, in).to_string();
      }
      return o;
    };
  });

  auto* eq = lm->add_subcommand("equal", "equality of words up to a depth");
  eq->add_option("--u", u, "word")->required();
  eq->add_option("--v", v, "word")->required();
  eq->add_option("--depth", depth, "prefix depth")->default_val(12);
  eq->callback([&] {
    action = [] {
      auto var = parse_variant(variant);
      auto c = equal_up_to_depth(LMWord::parse(u, var), LMWord::parse(v, var), depth);
      Outcome o;
      o.data["equal_to_depth"] = !c.distinct;
      o.data["depth"] = depth;
      if (c.witness) {
        o.data["witness"] = c.witness->to_string();
        o.data["position"] = c.position;
      }
      o.text = c.distinct ? "distinct (witness " + c.witness->to_string() + ", bit " + std::to_string(c.position) + ")"
                          : "equal up to depth " + std::to_string(depth);
      return o;
    };
  });

  auto* rel = lm->add_subcommand("relations", "the relation suite LM1-LM5 at (s, t)");
  rel->add_option("--s", s, "binary address")->default_val("");
  rel->add_option("--t", t, "binary address")->default_val("");
  rel->add_option("--depth", depth, "prefix depth")->default_val(12);
  rel->callback([&] {
    action = [] {
      Outcome o;
      o.data["variant"] = variant;
      o.data["s"] = s;
      o.data["t"] = t;
      o.data["depth"] = depth;
      o.data["relations"] = json::array();
      bool ok = true;
      for (const auto& r : relation_suite(s, t, depth, parse_variant(variant))) {
        const char* st = r.status == RelationInstance::Status::passed   ? "PASS"
                         : r.status == RelationInstance::Status::failed ? "FAIL"
                                                                          : "SKIP";
        ok = ok && r.status != RelationInstance::Status::failed;
        json j = {{"name", r.name}, {"status", st}, {"kind", "reference"}};
        if (r.lhs) j["lhs"] = r.lhs->to_string();
        if (r.rhs) j["rhs"] = r.rhs->to_string();
        if (!r.note.empty()) j["note"] = r.note;
        o.data["relations"].push_back(j);
        o.text += r.name + " " + st + (r.note.empty() ? "" : " (" + r.note + ")") + "\n";
      }
      o.data["passed"] = ok;
      if (!o.text.empty()) o.text.pop_back();
      o.code = ok ? 0 : 1;
      return o;
    };
  });

  auto* chr = lm->add_subcommand("characters", "characters defined on the variant");
  chr->add_option("--word", word, "word")->required();
  chr->callback([&] {
    action = [] {
      Outcome o;
      for (auto [c, val] : lm_characters(LMWord::parse(word, parse_variant(variant)))) {
        o.data[to_string(c)] = val;
        o.text += (o.text.empty() ? "" : " ") + to_string(c) + " " + std::to_string(val);
      }
      return o;
    };
  });

  auto* quo = lm->add_subcommand("quotient", "image in Z^2 under the variant's character pair");
  quo->add_option("--word", word, "word")->required();
  quo->callback([&] {
    action = [] {
      auto var = parse_variant(variant);
      auto [a, b] = quotient_image(LMWord::parse(word, var));
      auto [c1, c2] = quotient_characters(var);
      Outcome o;
      o.data["image"] = {a, b};
      o.data["characters"] = {(c1.sign < 0 ? "-" : "") + to_string(c1.character),
                              (c2.sign < 0 ? "-" : "") + to_string(c2.character)};
      o.text = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      return o;
    };
  });
}

// --- reid ---

FGAbelianGroup group_from(const std::string& relations, const std::string& invariants, std::size_t free_rank) {
  if (!relations.empty()) return FGAbelianGroup(IntMatrix::parse(relations));
  return FGAbelianGroup::from_invariants(parse_list(invariants), free_rank);
}

void add_reid(CLI::App& app, Action& action, const std::uint64_t& seed) {
  auto* reid = app.add_subcommand("reid", "Smith forms, fixed subgroups, Reidemeister numbers");
  reid->require_subcommand(1);
  static std::string matrix, relations, invariants, csv, phi, chars, group_name;
  static std::size_t free_rank = 0, instances = 1000;

  auto* snf = reid->add_subcommand("snf", "Smith normal form");
  snf->add_option("--matrix", matrix, "[[a,b],[c,d]]")->required();
  snf->callback([&] {
    action = [] {
      auto f = smith_normal_form(IntMatrix::parse(matrix));
      Outcome o;
      o.data["S"] = f.S.to_string();
      o.data["U"] = f.U.to_string();
      o.data["V"] = f.V.to_string();
      o.data["diagonal"] = vec_json(f.diagonal);
      o.text = "S = " + f.S.to_string() + "\nU = " + f.U.to_string() + "\nV = " + f.V.to_string();
      return o;
    };
  });

  auto group_options = [&](CLI::App* cmd) {
    cmd->add_option("--relations", relations, "relation columns as a matrix");
    cmd->add_option("--invariants", invariants, "comma-separated moduli, e.g. \"2,4\"");
    cmd->add_option("--free", free_rank, "free rank when --invariants is used");
    cmd->add_option("--matrix", matrix, "automorphism on the generators")->required();
  };

  auto* fix = reid->add_subcommand("fix", "fixed subgroup of an automorphism");
  group_options(fix);
  fix->callback([&] {
    action = [] {
      auto g = group_from(relations, invariants, free_rank);
      AbelianAuto a(g, IntMatrix::parse(matrix));
      auto s = fix_subgroup(a);
      Outcome o;
      o.data["group"] = g.describe();
      o.data["size"] = s.size.to_string();
      o.data["free_rank"] = s.free_rank;
      o.data["torsion"] = vec_json(s.torsion);
      o.data["generators"] = json::array();
      for (const auto& v : s.generators) o.data["generators"].push_back(vec_json(v));
      o.text = "|Fix| = " + s.size.to_string() + " in " + g.describe();
      for (const auto& v : s.generators) o.text += "\n  generator " + vec_text(v);
      return o;
    };
  });

  auto* number = reid->add_subcommand("number", "Reidemeister number |coker(M - I)|");
  group_options(number);
  number->callback([&] {
    action = [] {
      auto g = group_from(relations, invariants, free_rank);
      AbelianAuto a(g, IntMatrix::parse(matrix));
      auto r = reidemeister_number_abelian(a);
      Outcome o;
      o.data["group"] = g.describe();
      o.data["R"] = r.to_string();
      o.text = "R = " + r.to_string();
      return o;
    };
  });

  auto* oracle = reid->add_subcommand("oracle", "twisted classes in finite groups");
  oracle->add_option("--csv", csv, "multiplication table file");
  oracle->add_option("--group", group_name, "a group of the built-in corpus, e.g. D8");
  oracle->add_option("--phi", phi, "automorphism as an image list [..]");
  oracle->add_option("--instances", instances, "random abelian instances for the sweep")->default_val(1000);
  oracle->callback([&] {
    action = [&seed] {
      Outcome o;
      if (csv.empty() && group_name.empty()) {
        auto corpus = check_corpus(small_groups_corpus());
        auto random = check_random_abelian(instances, seed);
        o.data["corpus"] = {{"groups", corpus.groups},
                            {"automorphisms", corpus.automorphisms},
                            {"quotient_checks", corpus.quotient_checks},
                            {"failures", corpus.failures},
                            {"passed", corpus.ok()}};
        o.data["random_abelian"] = {{"instances", random.groups},
                                    {"quotient_checks", random.quotient_checks},
                                    {"failures", random.failures},
                                    {"passed", random.ok()}};
        o.text = "corpus: " + std::to_string(corpus.groups) + " groups, " + std::to_string(corpus.automorphisms) +
                 " automorphisms, " + std::to_string(corpus.quotient_checks) + " quotient checks, " +
                 (corpus.ok() ? "PASS" : "FAIL") + "\nrandom abelian: " + std::to_string(random.groups) +
                 " instances, " + (random.ok() ? "PASS" : "FAIL");
        for (const auto& f : corpus.failures) o.text += "\n  " + f;
        for (const auto& f : random.failures) o.text += "\n  " + f;
        o.code = corpus.ok() && random.ok() ? 0 : 1;
        return o;
      }
      std::optional<FiniteGroup> g;
      if (!csv.empty()) {
        g = FiniteGroup::parse_csv(read_file(csv));
      } else {
        for (auto& h : small_groups_corpus()) {
          if (h.name() == group_name) g = h;
        }
        if (!g) throw DomainError("no group named '" + group_name + "' in the corpus");
      }
      std::vector<Perm> autos;
      if (!phi.empty()) {
        autos.push_back(parse_perm(phi));
      } else {
        autos = g->automorphisms();
      }
      o.data["order"] = g->order();
      o.data["automorphisms"] = json::array();
      for (const auto& p : autos) {
        auto classes = twisted_classes_finite(*g, p);
        int fixed = fixed_point_count(*g, p);
        o.data["automorphisms"].push_back({{"phi", p}, {"R", classes.count}, {"fix", fixed}});
        std::string ps;
        for (std::size_t i = 0; i < p.size(); ++i) ps += (i ? "," : "") + std::to_string(p[i]);
        o.text += "[" + ps + "] R = " + std::to_string(classes.count) + " |Fix| = " + std::to_string(fixed) + "\n";
      }
      if (!o.text.empty()) o.text.pop_back();
      return o;
    };
  });

  auto* tec = reid->add_subcommand("tecnico", "fixed vector from an invariant character pair");
  tec->add_option("--chars", chars, "characters as matrix rows")->required();
  tec->add_option("--matrix", matrix, "induced map on the quotient")->required();
  tec->callback([&] {
    action = [] {
      IntMatrix c = IntMatrix::parse(chars);
      CharacterData data;
      for (std::size_t i = 0; i < c.rows(); ++i) {
        data.characters.push_back(c.row(i));
        data.labels.push_back("chi" + std::to_string(i + 1));
      }
      auto r = tecnico_pipeline(data, IntMatrix::parse(matrix));
      Outcome o;
      o.data["ok"] = r.ok;
      if (r.ok) {
        o.data["permutation"] = r.permutation;
        o.data["f"] = vec_json(r.f);
        o.data["fixed_vector"] = vec_json(r.fixed_vector);
        o.text = "fixed vector " + vec_text(r.fixed_vector) + " of infinite order; f = " + vec_text(r.f);
      } else {
        o.data["failure"] = r.failure;
        o.text = "failed: " + r.failure;
        o.code = 1;
      }
      return o;
    };
  });

  auto* ind = reid->add_subcommand("independence", "determinant of a character value matrix");
  ind->add_option("--values", matrix, "rows = characters, columns = generators")->required();
  ind->callback([&] {
    action = [] {
      auto r = character_independence(IntMatrix::parse(matrix));
      Outcome o;
      o.data["determinant"] = big(r.determinant);
      o.data["independent"] = r.independent;
      o.text = "det = " + big(r.determinant) + (r.independent ? " (independent)" : " (dependent)");
      return o;
    };
  });

  auto* eig = reid->add_subcommand("eigen", "whether a 2x2 unimodular matrix has eigenvalue 1");
  eig->add_option("--matrix", matrix, "[[a,b],[c,d]]")->required();
  eig->callback([&] {
    action = [] {
      bool e = eigenvalue_one_check(IntMatrix::parse(matrix));
      Outcome o;
      o.data["eigenvalue_one"] = e;
      o.text = e ? "true" : "false";
      return o;
    };
  });

  auto* table = reid->add_subcommand("table", "character values of the five groups and both actions");
  table->callback([&] {
    action = [] {
      Outcome o;
      o.data["rows"] = json::array();
      bool ok = true;
      for (const auto& row : character_table()) {
        CharacterData data{{row.values.row(0), row.values.row(1)}, row.characters};
        auto ind = character_independence(row.values);
        auto id = tecnico_pipeline(data, IntMatrix::identity(2));
        auto sw = tecnico_pipeline(data, swap_action(row.values));
        ok = ok && ind.independent && id.ok && sw.ok;
        o.data["rows"].push_back({{"group", row.group},
                                  {"characters", row.characters},
                                  {"basis", row.basis},
                                  {"values", row.values.to_string()},
                                  {"determinant", big(ind.determinant)},
                                  {"identity_fixed_vector", vec_json(id.fixed_vector)},
                                  {"swap_matrix", swap_action(row.values).to_string()},
                                  {"swap_fixed_vector", vec_json(sw.fixed_vector)}});
        o.text += row.group + "  " + row.characters[0] + "," + row.characters[1] + " on " + row.basis[0] + "," +
                  row.basis[1] + "  " + row.values.to_string() + "  det " + big(ind.determinant) + "  fixed " +
                  vec_text(id.fixed_vector) + " / " + vec_text(sw.fixed_vector) + "\n";
      }
      if (!o.text.empty()) o.text.pop_back();
      o.code = ok ? 0 : 1;
      return o;
    };
  });
}

// --- case ---

void add_case(CLI::App& app, Action& action, const std::uint64_t& seed) {
  auto* cs = app.add_subcommand("case", "worked examples");
  cs->require_subcommand(1);
  static GWOptions gw;
  static SL2Options sl2;
  static std::string p = "2", q = "3", r = "1+t";

  auto* gwc = cs->add_subcommand("gw", "the crystallographic group GW");
  gwc->add_option("--b", gw.b, "parameter b >= 1")->default_val(2);
  gwc->add_option("--pairs", gw.pairs, "random pairs for the homomorphism check")->default_val(10000);
  gwc->add_option("--radius", gw.radius, "ball radius for the fixed-point search")->default_val(8);
  gwc->callback([&] {
    action = [&seed] {
      gw.seed = seed;
      return report_outcome(case_gw(gw));
    };
  });

  auto* slc = cs->add_subcommand("sl2", "conjugation by [[3,1],[2,1]] in SL2(Z)");
  slc->add_option("--bound", sl2.bound, "entry bound for the commutant search")->default_val(1000000);
  slc->add_option("--samples", sl2.samples, "random matrices for the formula check")->default_val(1000);
  slc->callback([&] {
    action = [&seed] {
      sl2.seed = seed;
      return report_outcome(case_sl2(sl2));
    };
  });

  auto* cl = cs->add_subcommand("cohen-lustig", "an automorphism of F3 trivial on homology");
  cl->callback([&] { action = [] { return report_outcome(case_cohen_lustig()); }; });

  auto* un = cs->add_subcommand("uncount", "the PL family G(p,q,r)");
  un->add_option("--p", p, "exact number > 1")->default_val("2");
  un->add_option("--q", q, "exact number > 1")->default_val("3");
  un->add_option("--r", r, "exact number > 1")->default_val("1+t");
  un->callback([&] {
    action = [] {
      UncountOptions o{ExactNumber::parse(p), ExactNumber::parse(q), ExactNumber::parse(r)};
      Outcome out = report_outcome(case_uncount(o));
      auto maps = build_example_uncount(o.p, o.q, o.r);
      out.data["maps"] = {{"f", maps.f.to_string()}, {"g", maps.g.to_string()}, {"h", maps.h.to_string()}};
      out.text = "f = " + maps.f.to_string() + "\ng = " + maps.g.to_string() + "\nh = " + maps.h.to_string() + "\n" +
                 out.text;
      return out;
    };
  });
}

// --- sigma ---

void add_sigma(CLI::App& app, Action& action) {
  auto* sg = app.add_subcommand("sigma", "Cayley-graph balls and nonnegative subgraphs");
  sg->require_subcommand(1);
  static std::string group = "Z", chr;
  static std::size_t radius = 3;

  auto component_json = [](const ComponentReport& c) {
    return json{{"character", c.character},
                {"radius", c.radius},
                {"ball_size", c.ball_size},
                {"subgraph_size", c.subgraph_size},
                {"components", c.components()},
                {"component_sizes", c.component_sizes},
                {"exact_equality", c.exact_equality},
                {"label", c.label()}};
  };
  auto component_text = [](const ComponentReport& c) {
    std::string s = c.label() + ": " + std::to_string(c.components()) + " component(s) among " +
                    std::to_string(c.subgraph_size) + " vertices with " + c.character + " >= 0";
    if (!c.exact_equality) s += " (equality tested to finite depth)";
    return s;
  };

  auto* bl = sg->add_subcommand("ball", "ball of a radius");
  bl->add_option("--group", group, "Z, Z^n, GW:b, F, F-pl, LM, LM:depth")->required();
  bl->add_option("--radius", radius, "radius")->required();
  bl->add_option("--char", chr, "also report the nonnegative subgraph of this character");
  bl->callback([&, component_json, component_text] {
    action = [component_json, component_text] {
      auto o = make_oracle(group);
      auto b = ball(o, radius);
      Outcome out;
      out.data["group"] = o.name;
      out.data["radius"] = radius;
      out.data["vertices"] = b.vertices.size();
      out.data["edges"] = b.edges.size();
      out.data["exact_equality"] = b.exact_equality;
      std::vector<std::size_t> growth(radius + 1, 0);
      for (auto d : b.distance) ++growth[d];
      out.data["sphere_sizes"] = growth;
      out.text = o.name + ": " + std::to_string(b.vertices.size()) + " elements of length <= " +
                 std::to_string(radius);
      if (!b.exact_equality) {
        out.text += " (equality tested to finite depth; " + std::to_string(b.merged_literals) + " merged literals)";
        out.data["merged_literals"] = b.merged_literals;
      }
      if (!chr.empty()) {
        auto c = nonneg_subgraph_components(o, b, chr);
        out.data["subgraph"] = component_json(c);
        out.text += "\n" + component_text(c);
      }
      return out;
    };
  });

  auto* comp = sg->add_subcommand("components", "components of the nonnegative subgraph");
  comp->add_option("--group", group, "Z, Z^n, GW:b, F, F-pl, LM, LM:depth")->required();
  comp->add_option("--radius", radius, "radius")->required();
  comp->add_option("--char", chr, "character label")->required();
  comp->callback([&, component_json, component_text] {
    action = [component_json, component_text] {
      auto o = make_oracle(group);
      auto c = nonneg_subgraph_components(o, chr, radius);
      Outcome out;
      out.data = component_json(c);
      out.data["group"] = o.name;
      out.text = component_text(c);
      return out;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations with Thompson-like groups, twisted conjugacy and Reidemeister numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = kDefaultSeed;
  app.add_flag("--json", as_json, "print a JSON report");
  app.add_option("--seed", seed, "seed for randomized checks")->default_val(kDefaultSeed);
  Action action;
  add_pl(app, action);
  add_f(app, action);
  add_fbr(app, action);
  add_lm(app, action);
  add_reid(app, action, seed);
  add_case(app, action, seed);
  add_sigma(app, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Outcome o = action();
    if (as_json) {
      std::cout << o.data.dump(2) << "\n";
    } else {
      std::cout << o.text << "\n";
    }
    return o.code;
  } catch (const tlg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const tlg::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
