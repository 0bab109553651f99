#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "weyl/bundle.hpp"
#include "weyl/json_io.hpp"
#include "weyl/models.hpp"
#include "weyl/topology.hpp"

using namespace weyl;

namespace {

int g_exit = 0;

void note_report(Json& out, const std::string& key, const Report& r) {
  out[key] = report_to_json(r);
  if (!r.ok) g_exit = 1;
}

WeylPair load_pair(const std::string& file, const std::string& model) {
  if (!model.empty()) return model_by_name(model);
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot read " + file);
  Json j = Json::parse(in);
  return pair_from_json(j);
}

Carrier carrier_of(const std::string& s) {
  if (s == "ultrafilters") return Carrier::Ultrafilters;
  if (s == "filters") return Carrier::Filters;
  if (s == "cosets") return Carrier::Cosets;
  throw std::invalid_argument("unknown carrier: " + s);
}

void emit(const Json& j, const std::string& out_file) {
  std::string text = j.dump(2) + "\n";
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file);
    if (!out) throw std::invalid_argument("cannot write " + out_file);
    out << text;
  }
}

std::string dot_of(const TopGroupoid& g) {
  std::string s = "digraph weyl {\n";
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    s += "  n" + std::to_string(i) + " [label=\"" + std::to_string(i) +
         (g.unit[i] ? " unit" : "") + "\"];\n";
  }
  for (std::size_t i = 0; i < g.points.size(); ++i)
    s += "  n" + std::to_string(g.source[i]) + " -> n" + std::to_string(g.range[i]) +
         " [label=\"" + std::to_string(g.source[i]) + "->" + std::to_string(g.range[i]) +
         " (" + std::to_string(i) + ")\"];\n";
  s += "}\n";
  return s;
}

Json set_list(const std::vector<ElementSet>& v) {
  Json a = Json::array();
  for (const ElementSet& s : v) a.push_back(s.elements());
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Weyl groupoid toolkit"};
  app.require_subcommand(1);

  std::string file, model, out_file, dot_file, carrier = "ultrafilters", eps = "1/1000000";
  std::uint64_t seed = 0;
  int samples = 1000, workers = 1;
  bool exact = false, list = false;
  if (const char* env = std::getenv("WEYL_WORKERS")) workers = std::atoi(env);

  auto* verify = app.add_subcommand("verify", "check the *-semigroup and Weyl-pair laws");
  verify->add_option("file", file);
  verify->add_option("--pair-model", model);

  auto* modelc = app.add_subcommand("model", "emit a bundled model as JSON");
  modelc->add_option("name", model);
  modelc->add_flag("--list", list);
  modelc->add_option("--out", out_file);

  auto* weylc = app.add_subcommand("weyl", "build the Weyl groupoid on a carrier");
  weylc->add_option("file", file);
  weylc->add_option("--pair-model", model);
  weylc->add_option("--carrier", carrier);
  weylc->add_option("--dot", dot_file);
  weylc->add_option("--out", out_file);

  auto* cosetsc = app.add_subcommand("cosets", "enumerate filters, ultrafilters and cosets");
  cosetsc->add_option("file", file);
  cosetsc->add_option("--pair-model", model);
  cosetsc->add_option("--out", out_file);

  auto* lawsc = app.add_subcommand("laws", "sampled *-ring law suite");
  lawsc->add_option("--samples", samples);
  lawsc->add_option("--seed", seed)->required();
  lawsc->add_option("--workers", workers);
  lawsc->add_option("--out", out_file);

  auto* normc = app.add_subcommand("norm", "unital reduction of a rational matrix");
  normc->add_option("file", file)->required();
  normc->add_flag("--exact", exact);
  normc->add_option("--eps", eps);
  normc->add_option("--out", out_file);

  auto* bundlec = app.add_subcommand("bundle", "Weyl bundle of a bundled action system");
  bundlec->add_option("name", model);
  bundlec->add_flag("--list", list);
  bundlec->add_option("--out", out_file);

  auto* exportc = app.add_subcommand("export", "write a bundled model to a JSON file");
  exportc->add_option("name", model)->required();
  exportc->add_option("--out", out_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Json out;
    if (verify->parsed()) {
      WeylPair p = load_pair(file, model);
      out["name"] = p.name;
      note_report(out, "star_semigroup", validate_star_semigroup(p.s));
      note_report(out, "weyl_pair", is_weyl_pair(p));
      note_report(out, "relation_laws", relation_law_suite(p));
      emit(out, out_file);
    } else if (modelc->parsed()) {
      if (list) {
        out["models"] = model_names();
        emit(out, out_file);
      } else {
        emit(pair_to_json(model_by_name(model)), out_file);
      }
    } else if (weylc->parsed()) {
      WeylPair p = load_pair(file, model);
      RelationCache rc(p);
      TopGroupoid g = weyl_groupoid(rc, carrier_of(carrier));
      out["name"] = p.name;
      out["carrier"] = carrier;
      out["points"] = set_list(g.points);
      out["exhaustive"] = g.exhaustive;
      out["open_sets"] = g.top.opens.size();
      note_report(out, "etale", etale_report(g));
      note_report(out, "groupoid_laws", coset_groupoid_laws(rc, g.points));
      if (!dot_file.empty()) {
        std::ofstream d(dot_file);
        if (!d) throw std::invalid_argument("cannot write " + dot_file);
        d << dot_of(g);
      }
      emit(out, out_file);
    } else if (cosetsc->parsed()) {
      WeylPair p = load_pair(file, model);
      RelationCache rc(p);
      out["name"] = p.name;
      out["filters"] = set_list(enumerate_filters(rc));
      out["ultrafilters"] = set_list(enumerate_ultrafilters(rc));
      CosetFamily fam = enumerate_cosets(rc);
      out["cosets"] = set_list(fam.cosets);
      std::vector<ElementSet> units;
      for (const ElementSet& c : fam.cosets)
        if (classify_subset(rc, c).unit_coset) units.push_back(c);
      out["units"] = set_list(units);
      out["cosets_exhaustive"] = fam.exhaustive;
      emit(out, out_file);
    } else if (lawsc->parsed()) {
      Report r = ring_law_suite(seed, samples, workers);
      std::sort(r.violations.begin(), r.violations.end(),
                [](const Witness& a, const Witness& b) {
                  return std::tie(a.law, a.elems) < std::tie(b.law, b.elems);
                });
      out["samples"] = samples;
      out["seed"] = seed;
      note_report(out, "ring_laws", r);
      emit(out, out_file);
    } else if (normc->parsed()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot read " + file);
      RMatrix m = matrix_from_json(Json::parse(in));
      ExtRat v = ceil_norm(m, exact, rat_from_string(eps));
      if (v.infinite) {
        out["ceil_norm"] = "inf";
      } else {
        out["ceil_norm"] = rat_to_string(v.value);
      }
      out["exact"] = v.exact;
      emit(out, out_file);
    } else if (bundlec->parsed()) {
      if (list) {
        out["systems"] = action_system_names();
        emit(out, out_file);
      } else {
        ActionSystem sys = action_system_by_name(model);
        Report valid = validate_action_system(sys);
        note_report(out, "system", valid);
        BundleSpace w = bundle_space(sys);
        out["name"] = sys.name;
        Json fibers = Json::array();
        for (std::size_t j = 0; j < w.ultrafilters.size(); ++j) {
          Json f;
          f["ultrafilter"] = w.ultrafilters[j].elements();
          Json classes = Json::array();
          for (const BundlePoint& p : w.points)
            if (p.u == static_cast<int>(j)) classes.push_back(p.cls.elements());
          f["classes"] = classes;
          fibers.push_back(f);
        }
        out["fibers"] = fibers;
        out["open_sets"] = w.top.opens.size();
        out["hausdorff"] = bundle_hausdorff_check(w).ok;
        note_report(out, "projection", projection_report(sys, w));
        emit(out, out_file);
      }
    } else if (exportc->parsed()) {
      emit(pair_to_json(model_by_name(model)), out_file);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
