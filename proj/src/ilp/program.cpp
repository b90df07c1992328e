#include "tupleqa/ilp/program.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tupleqa::ilp {

int BinaryProgram::add_variable(const std::string& id, double coefficient) {
  if (index_.count(id))
    throw ValidationError("duplicate variable id: " + id);
  index_[id] = variables.size();
  variables.push_back({id, coefficient});
  return int(variables.size()) - 1;
}

std::optional<size_t> BinaryProgram::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it != index_.end()) return it->second;
  // Fall back to a scan for programs assembled by aggregate initialization.
  for (size_t i = 0; i < variables.size(); ++i)
    if (variables[i].id == id) return i;
  return std::nullopt;
}

CompiledProgram compile(const BinaryProgram& program) {
  CompiledProgram cp;
  cp.n = program.variables.size();
  cp.coeff.reserve(cp.n);
  std::unordered_map<std::string, size_t> index;
  index.reserve(cp.n);
  for (size_t i = 0; i < cp.n; ++i) {
    const Variable& v = program.variables[i];
    if (!std::isfinite(v.coefficient))
      throw ValidationError("non-finite coefficient for variable " + v.id);
    if (!index.emplace(v.id, i).second)
      throw ValidationError("duplicate variable id: " + v.id);
    cp.coeff.push_back(v.coefficient);
  }
  cp.rows.reserve(program.constraints.size());
  for (const LinearConstraint& c : program.constraints) {
    if (c.terms.empty())
      throw ValidationError("constraint with no terms: " + c.name);
    CompiledProgram::Row row;
    row.relation = c.relation;
    row.bound = c.bound;
    if (!std::isfinite(c.bound))
      throw ValidationError("non-finite bound in constraint " + c.name);
    std::unordered_map<size_t, size_t> seen;
    for (const auto& [id, coef] : c.terms) {
      auto it = index.find(id);
      if (it == index.end())
        throw ValidationError("constraint references unknown variable: " + id);
      if (!std::isfinite(coef))
        throw ValidationError("non-finite coefficient in constraint " + c.name);
      auto [pos, inserted] = seen.emplace(it->second, row.terms.size());
      if (inserted)
        row.terms.emplace_back(it->second, coef);
      else
        row.terms[pos->second].second += coef;  // merge duplicate mentions
    }
    cp.rows.push_back(std::move(row));
  }
  cp.fixed.assign(cp.n, -1);
  for (const auto& [id, value] : program.forced) {
    auto it = index.find(id);
    if (it == index.end())
      throw ValidationError("forced assignment references unknown variable: " + id);
    if (value != 0 && value != 1)
      throw ValidationError("forced value must be 0 or 1 for " + id);
    cp.fixed[it->second] = value;
  }
  return cp;
}

std::optional<std::string> validate_assignment(const BinaryProgram& program,
                                               const Assignment& assignment) {
  constexpr double kTol = 1e-9;
  for (const Variable& v : program.variables) {
    auto it = assignment.find(v.id);
    if (it == assignment.end())
      return "missing assignment for variable " + v.id;
    if (it->second != 0 && it->second != 1)
      return "non-binary value for variable " + v.id;
  }
  for (const auto& [id, value] : program.forced) {
    auto it = assignment.find(id);
    if (it == assignment.end() || it->second != value)
      return "forced value violated for variable " + id;
  }
  for (const LinearConstraint& c : program.constraints) {
    double lhs = 0.0;
    for (const auto& [id, coef] : c.terms) {
      auto it = assignment.find(id);
      if (it == assignment.end()) return "missing assignment for variable " + id;
      lhs += coef * it->second;
    }
    bool ok = true;
    switch (c.relation) {
      case Relation::LessEq: ok = lhs <= c.bound + kTol; break;
      case Relation::Equal: ok = std::abs(lhs - c.bound) <= kTol; break;
      case Relation::GreaterEq: ok = lhs >= c.bound - kTol; break;
    }
    if (!ok) {
      std::ostringstream os;
      os << "constraint violated" << (c.name.empty() ? "" : " (" + c.name + ")")
         << ": lhs=" << lhs << " bound=" << c.bound;
      return os.str();
    }
  }
  return std::nullopt;
}

double objective_value(const BinaryProgram& program,
                       const Assignment& assignment) {
  double z = 0.0;
  for (const Variable& v : program.variables) {
    auto it = assignment.find(v.id);
    if (it != assignment.end()) z += v.coefficient * it->second;
  }
  return z;
}

namespace {

void append_terms(std::ostream& os,
                  const std::vector<std::pair<std::string, double>>& terms) {
  bool first = true;
  for (const auto& [id, coef] : terms) {
    if (coef >= 0 && !first) os << " + ";
    if (coef < 0) os << (first ? "- " : " - ");
    os << std::abs(coef) << " " << id;
    first = false;
  }
}

}  // namespace

std::string to_lp_string(const BinaryProgram& program) {
  std::ostringstream os;
  os.precision(17);
  os << "Maximize\n obj:";
  bool first = true;
  for (const Variable& v : program.variables) {
    if (v.coefficient == 0.0) continue;
    if (v.coefficient >= 0 && !first) os << " +";
    if (v.coefficient < 0) os << " -";
    else os << " ";
    os << std::abs(v.coefficient) << " " << v.id;
    first = false;
  }
  if (first) os << " 0 " << (program.variables.empty() ? "x_dummy" : program.variables[0].id);
  os << "\nSubject To\n";
  for (size_t i = 0; i < program.constraints.size(); ++i) {
    const LinearConstraint& c = program.constraints[i];
    os << " " << (c.name.empty() ? "c" + std::to_string(i) : c.name) << ": ";
    append_terms(os, c.terms);
    switch (c.relation) {
      case Relation::LessEq: os << " <= "; break;
      case Relation::Equal: os << " = "; break;
      case Relation::GreaterEq: os << " >= "; break;
    }
    os << c.bound << "\n";
  }
  for (const auto& [id, value] : program.forced)
    os << " forced_" << id << ": " << id << " = " << value << "\n";
  os << "Binaries\n";
  for (const Variable& v : program.variables) os << " " << v.id;
  os << "\nEnd\n";
  return os.str();
}

}  // namespace tupleqa::ilp
