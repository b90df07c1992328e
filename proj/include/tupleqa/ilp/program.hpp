#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tupleqa::ilp {

enum class Relation { LessEq, Equal, GreaterEq };

struct Variable {
  std::string id;
  double coefficient = 0.0;
};

struct LinearConstraint {
  std::vector<std::pair<std::string, double>> terms;
  Relation relation = Relation::LessEq;
  double bound = 0.0;
  std::string name;  // optional, for LP dumps and diagnostics
};

// A 0-1 maximization program: binary decision variables with objective
// coefficients, linear constraints, and optional forced assignments.
struct BinaryProgram {
  std::vector<Variable> variables;
  std::vector<LinearConstraint> constraints;
  std::map<std::string, int> forced;

  int add_variable(const std::string& id, double coefficient);
  void add_constraint(LinearConstraint c) { constraints.push_back(std::move(c)); }

  std::optional<size_t> index_of(const std::string& id) const;

 private:
  std::unordered_map<std::string, size_t> index_;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Index-resolved form used by the solvers.
struct CompiledProgram {
  size_t n = 0;
  std::vector<double> coeff;
  struct Row {
    std::vector<std::pair<size_t, double>> terms;
    Relation relation;
    double bound;
  };
  std::vector<Row> rows;
  std::vector<int> fixed;  // -1 free, else forced 0/1
};

// Resolves ids to indices; throws ValidationError on unknown or duplicate
// ids, non-finite coefficients, or empty constraint terms.
CompiledProgram compile(const BinaryProgram& program);

using Assignment = std::map<std::string, int>;

// Returns an explanation of the first violated condition, or nullopt when
// `assignment` is a complete feasible 0/1 assignment (1e-9 tolerance).
std::optional<std::string> validate_assignment(const BinaryProgram& program,
                                               const Assignment& assignment);

double objective_value(const BinaryProgram& program,
                       const Assignment& assignment);

// CPLEX LP text format dump, for cross-checking against external solvers.
std::string to_lp_string(const BinaryProgram& program);

}  // namespace tupleqa::ilp
