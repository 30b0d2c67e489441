// Copyright 2026 The revtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "revtri/sweep.hpp"

#include <sstream>

#include "revtri/error.hpp"

namespace revtri {
namespace {

[[noreturn]] void not_applicable(BoundId id, const std::string& name) {
  throw InputError("parameter '" + name + "' does not apply to " + std::string(to_string(id)));
}

void set_recipe_param(ExtremalRequest& req, const std::string& name, double value) {
  RecipeParams& p = req.params;
  switch (req.bound) {
    case BoundId::kDominance:
      if (name == "k") return void(p.k = value);
      if (name == "alpha") return void(p.alpha = value);
      break;
    case BoundId::kBall:
      if (name == "rho") return void(p.rho = value);
      break;
    case BoundId::kBand:
    case BoundId::kBandProfile:
      if (name == "m") return void(p.lower = value);
      if (name == "M") return void(p.upper = value);
      break;
    case BoundId::kBallProfile:
      if (name == "r") return void(p.radius = value);
      break;
    case BoundId::kFamilyDominance:
      if (name == "c") return void(req.scale = value);
      break;
    default:
      throw InputError("no extremal recipe for " + std::string(to_string(req.bound)) +
                       "; pass a base scenario");
  }
  not_applicable(req.bound, name);
}

ExtremalRequest default_recipe(BoundId id) {
  ExtremalRequest req;
  req.bound = id;
  switch (id) {
    case BoundId::kDominance:
      req.params.k = 0.5;
      req.params.alpha = 1.0;
      break;
    case BoundId::kBall: req.params.rho = 0.6; break;
    case BoundId::kBand:
    case BoundId::kBandProfile:
      req.params.lower = 1.0;
      req.params.upper = 4.0;
      break;
    case BoundId::kBallProfile: req.params.radius = 0.5; break;
    case BoundId::kFamilyDominance:
      req.scale = 1.0;
      req.family_size = 2;
      break;
    default: break;
  }
  return req;
}

void set_scenario_param(ParamSpec& p, BoundId id, const std::string& name, double value) {
  const ProfileExpr constant = ConstantProfile{value};
  const bool family = kind_of(id) == BoundKind::kFamily;
  auto fill_numbers = [&](std::vector<double>& v) { std::fill(v.begin(), v.end(), value); };
  auto fill_profiles = [&](std::vector<ProfileExpr>& v) {
    std::fill(v.begin(), v.end(), constant);
  };
  switch (id) {
    case BoundId::kDominance:
    case BoundId::kFamilyDominance:
      if (name != "k") break;
      family ? fill_profiles(p.family_k) : void(p.k = constant);
      return;
    case BoundId::kBall:
    case BoundId::kRatioBall:
    case BoundId::kComplexBall:
    case BoundId::kFamilyBall:
      if (name != "rho") break;
      family ? fill_numbers(p.family_rho) : void(p.rho = value);
      return;
    case BoundId::kBand:
    case BoundId::kRatioBand:
    case BoundId::kComplexBand:
    case BoundId::kFamilyBand:
      if (name == "m") {
        family ? fill_numbers(p.family_lower) : void(p.lower = value);
        return;
      }
      if (name == "M") {
        family ? fill_numbers(p.family_upper) : void(p.upper = value);
        return;
      }
      break;
    case BoundId::kBallProfile:
    case BoundId::kFamilyBallProfile:
      if (name != "r") break;
      family ? fill_profiles(p.family_radius) : void(p.radius = constant);
      return;
    case BoundId::kBandProfile:
    case BoundId::kComplexBox:
    case BoundId::kFamilyBandProfile:
      if (name == "m") {
        family ? fill_profiles(p.family_lower_profile) : void(p.lower_profile = constant);
        return;
      }
      if (name == "M") {
        family ? fill_profiles(p.family_upper_profile) : void(p.upper_profile = constant);
        return;
      }
      break;
    case BoundId::kRatio:
      if (name != "K") break;
      p.ratio = value;
      return;
    case BoundId::kArgument:
      if (name != "theta") break;
      p.theta = value;
      return;
  }
  not_applicable(id, name);
}

SweepRow row_from(double value, const BoundResult& r) {
  return {value, r.lhs, r.rhs, r.margin, std::nullopt, r.verdict};
}

}  // namespace

SweepTable sweep(const SweepRequest& req) {
  if (req.steps == 0) throw InputError("steps must be >= 1");
  if (!std::isfinite(req.from) || !std::isfinite(req.to)) {
    throw InputError("sweep range must be finite");
  }
  SweepTable table;
  table.bound = req.bound;
  table.parameter = req.parameter;

  std::optional<std::size_t> slot;
  if (req.base) {
    for (std::size_t i = 0; i < req.base->bounds.size(); ++i) {
      if (req.base->bounds[i].id == req.bound) {
        slot = i;
        break;
      }
    }
    if (!slot) {
      throw InputError("base scenario has no bound " + std::string(to_string(req.bound)));
    }
    Scenario probe = *req.base;
    set_scenario_param(probe.bounds[*slot].params, req.bound, req.parameter, req.from);
  } else {
    ExtremalRequest probe = default_recipe(req.bound);
    set_recipe_param(probe, req.parameter, req.from);
  }

  for (std::size_t i = 0; i < req.steps; ++i) {
    const double value =
        req.steps == 1 ? req.from
                       : req.from + static_cast<double>(i) * (req.to - req.from) /
                                        static_cast<double>(req.steps - 1);
    try {
      if (req.base) {
        Scenario s = *req.base;
        set_scenario_param(s.bounds[*slot].params, req.bound, req.parameter, value);
        validate_scenario(s);
        const RunReport report = run(s);
        table.rows.push_back(row_from(value, report.results[*slot]));
      } else {
        ExtremalRequest er = default_recipe(req.bound);
        set_recipe_param(er, req.parameter, value);
        const RunReport report = run(make_extremal_scenario(er));
        SweepRow row = row_from(value, report.results.front());
        row.extremal_gap = row.margin;
        table.rows.push_back(row);
      }
    } catch (const Error& e) {
      std::ostringstream os;
      os << req.parameter << " = " << format_number(value) << " skipped: " << e.what();
      table.warnings.push_back(os.str());
    }
  }
  return table;
}

std::string sweep_csv(const SweepTable& table) {
  std::ostringstream os;
  os << table.parameter << ",lhs,rhs,margin,extremal_gap,verdict\n";
  for (const auto& r : table.rows) {
    os << format_number(r.value) << ',' << format_number(r.lhs) << ',' << format_number(r.rhs)
       << ',' << format_number(r.margin) << ','
       << (r.extremal_gap ? format_number(*r.extremal_gap) : std::string()) << ','
       << to_string(r.verdict) << '\n';
  }
  return os.str();
}

}  // namespace revtri
