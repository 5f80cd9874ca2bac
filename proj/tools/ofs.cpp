// Command-line front end: instance validation, weight/sequence
// classification, completeness audits, and fixture generation.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ofs/generate.hpp"
#include "ofs/json_io.hpp"

using namespace ofs;

namespace {

TNorm parse_tnorm(const std::string& name) {
  if (!name.empty() && name.front() == '{') return tnorm_from_json(json::parse(name));
  if (name == "godel") return TNorm::godel();
  if (name == "lukasiewicz") return TNorm::lukasiewicz();
  if (name == "product") return TNorm::product();
  throw ParseError("unknown t-norm \"" + name + "\" (use godel|lukasiewicz|product or a JSON descriptor)");
}

std::vector<truth> parse_values(const std::string& csv) {
  std::vector<truth> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    out.push_back(std::stod(csv.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

void emit(const json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // the human-readable form is a flat rendering of the same JSON
  for (const auto& [key, value] : j.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

json classify_weight_json(const Instance& inst, const std::string& name, const Weight& w,
                          int budget, std::uint64_t seed) {
  json out;
  out["weight"] = name;
  out["cauchy"] = is_cauchy(inst.category, w);
  out["forward_cauchy"] = is_forward_cauchy_weight(inst.category, w);
  out["bicauchy"] = is_bicauchy_weight(inst.category, w);
  out["flat"] = flat_verdict_to_json(check_flat(inst.category, w, budget, seed));
  return out;
}

json classify_sequence_json(const Instance& inst, const std::string& name, const EPSequence& s) {
  json out;
  out["sequence"] = name;
  const NetClass nc = classify_net(inst.category, s);
  out["forward_cauchy"] = nc.forward_cauchy;
  out["bicauchy"] = nc.bicauchy;
  if (nc.net_type) {
    out["type"] = *nc.net_type;
    json ylim = json::array(), blim = json::array();
    for (std::size_t x = 0; x < inst.category.size(); ++x) {
      if (is_yoneda_limit(inst.category, s, x)) ylim.push_back(inst.category.objects[x]);
      if (is_bilimit(inst.category, s, x)) blim.push_back(inst.category.objects[x]);
    }
    out["yoneda_limits"] = ylim;
    out["bilimits"] = blim;
  } else {
    out["type"] = nullptr;
  }
  return out;
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Unknown: return "unknown";
  }
  return "?";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered fuzzy sets over continuous t-norms: validation, classification, completeness"};
  app.require_subcommand(1);

  std::string path, weight_name, seq_name, mode = "yoneda", tnorm_spec = "godel", values_csv, out_path;
  int budget = 200, resolution = 20, objects = 4;
  std::uint64_t seed = 0;
  double a = 0.5, b = 0.7;
  bool as_json = false;

  CLI::App* validate_cmd = app.add_subcommand("validate", "validate an instance file");
  validate_cmd->add_option("path", path)->required();
  validate_cmd->add_flag("--json", as_json);

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a named weight or sequence");
  classify_cmd->add_option("path", path)->required();
  classify_cmd->add_option("--weight", weight_name);
  classify_cmd->add_option("--seq", seq_name);
  classify_cmd->add_option("--budget", budget);
  classify_cmd->add_option("--seed", seed);
  classify_cmd->add_flag("--json", as_json);

  CLI::App* completeness_cmd = app.add_subcommand("completeness", "decide a completeness notion");
  completeness_cmd->add_option("path", path)->required();
  completeness_cmd->add_option("--mode", mode)->check(CLI::IsMember({"yoneda", "bi", "cauchy", "flat"}));
  completeness_cmd->add_option("--budget", budget);
  completeness_cmd->add_option("--seed", seed);
  completeness_cmd->add_flag("--json", as_json);

  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  std::string kind;
  gen_cmd->add_option("kind", kind)->required()->check(
      CLI::IsMember({"counterexample", "min", "residuum-grid", "random"}));
  gen_cmd->add_option("--tnorm", tnorm_spec);
  gen_cmd->add_option("--a", a);
  gen_cmd->add_option("--b", b);
  gen_cmd->add_option("--values", values_csv);
  gen_cmd->add_option("--objects", objects);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--resolution", resolution);
  gen_cmd->add_option("--out", out_path)->required();
  gen_cmd->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      try {
        Instance inst = load_instance(path);
        json ok;
        ok["valid"] = true;
        ok["objects"] = inst.category.size();
        emit(ok, as_json);
        return 0;
      } catch (const ValidationError& ex) {
        emit(report_to_json(ex.report()), as_json);
        return 1;
      }
    }

    if (classify_cmd->parsed()) {
      const Instance inst = load_instance(path);
      if (!weight_name.empty()) {
        const Weight* w = inst.find_weight(weight_name);
        if (!w) {
          std::cerr << "unknown weight \"" << weight_name << "\"\n";
          return 1;
        }
        emit(classify_weight_json(inst, weight_name, *w, budget, seed), as_json);
        return 0;
      }
      if (!seq_name.empty()) {
        const EPSequence* s = inst.find_sequence(seq_name);
        if (!s) {
          std::cerr << "unknown sequence \"" << seq_name << "\"\n";
          return 1;
        }
        emit(classify_sequence_json(inst, seq_name, *s), as_json);
        return 0;
      }
      std::cerr << "classify needs --weight or --seq\n";
      return 1;
    }

    if (completeness_cmd->parsed()) {
      const Instance inst = load_instance(path);
      CompletenessMode m = CompletenessMode::Yoneda;
      if (mode == "bi") m = CompletenessMode::Bi;
      else if (mode == "cauchy") m = CompletenessMode::Cauchy;
      else if (mode == "flat") m = CompletenessMode::Flat;
      const CompletenessReport rep = completeness(inst.category, m, budget, seed);
      json out;
      out["mode"] = mode;
      out["complete"] = decision_name(rep.complete);
      out["detail"] = rep.detail;
      if (rep.witness) {
        json wj;
        wj["type"] = rep.witness->wtype;
        wj["values"] = rep.witness->values;
        out["witness"] = wj;
      }
      emit(out, as_json);
      return 0;
    }

    if (gen_cmd->parsed()) {
      Instance inst;
      const TNorm t = parse_tnorm(tnorm_spec);
      if (kind == "counterexample") {
        const auto ce = idempotent_counterexample(t, a, b);
        inst.category = ce.category;
        inst.weights.emplace_back("phi", ce.phi);
        inst.coweights.emplace_back("psi", ce.psi);
        inst.sequences.emplace_back("sx", EPSequence{{}, {0}});
      } else if (kind == "min") {
        if (values_csv.empty()) throw std::invalid_argument("gen min needs --values");
        inst.category = min_category(t, parse_values(values_csv));
      } else if (kind == "residuum-grid") {
        inst.category = residuum_grid_category(t, resolution);
        inst.weights.emplace_back("phi", residuum_grid_weight(inst.category, t, a));
      } else {
        inst.category = random_category(t, static_cast<std::size_t>(objects), seed);
        inst.weights.emplace_back("w0", random_weight(inst.category, mix_seed(seed, 1)));
        inst.weights.emplace_back("w1", random_weight(inst.category, mix_seed(seed, 2)));
        inst.coweights.emplace_back("c0", random_coweight(inst.category, mix_seed(seed, 3)));
        inst.sequences.emplace_back("s0", random_sequence(inst.category, mix_seed(seed, 4)));
        inst.sequences.emplace_back("s1", random_sequence(inst.category, mix_seed(seed, 5)));
      }
      save_instance(inst, out_path);
      json out;
      out["written"] = out_path;
      out["objects"] = inst.category.size();
      emit(out, as_json);
      return 0;
    }
  } catch (const ParseError& ex) {
    std::cerr << ex.what() << "\n";
    return 2;
  } catch (const ValidationError& ex) {
    std::cerr << ex.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& ex) {
    std::cerr << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << ex.what() << "\n";
    return 1;
  }
  return 0;
}
