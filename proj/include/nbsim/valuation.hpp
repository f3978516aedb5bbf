#pragma once

#include <string>
#include <vector>

#include "nbsim/core.hpp"

namespace nbsim {

struct Criterion {
    std::string name;
    double weight = 0.0;  // strictly positive
};

struct PriorityEntry {
    UserClass user_class;
    int priority = 0;  // 1..5
};

/// Criteria weights crossed with user-class priorities. The column sum for a
/// class gives the consumption value v of a resource offered to that class.
struct DecisionMatrix {
    std::vector<Criterion> criteria;
    std::vector<PriorityEntry> priority_table;

    /// Matrix with the default priority map:
    /// HighEnd 5, Privileged 4, Casual 3, Naive 2, Underprivileged 1.
    static DecisionMatrix with_default_priorities(std::vector<Criterion> criteria);

    /// Priority for a class; throws std::invalid_argument("unmapped user class")
    /// when the class is absent from the table.
    int priority_of(UserClass c) const;
};

struct CriterionProduct {
    std::string name;
    double product = 0.0;  // weight * priority
};

struct ResourceValuation {
    std::string resource_id;
    double value = 0.0;
    std::vector<CriterionProduct> per_criterion;
};

/// Consumption value of one resource offered to a user of the given class:
/// v = sum over criteria of weight * priority(user_class).
ResourceValuation value_for(const DecisionMatrix& matrix, UserClass user_class,
                            const std::string& resource_id = {});

/// Id of the valuation with maximal value; ties broken by smallest resource
/// id. Throws std::invalid_argument("no resources") on an empty sequence.
std::string max_value_resource(const std::vector<ResourceValuation>& valuations);

/// Stable ascending order by (value, resource_id).
std::vector<ResourceValuation> sort_by_value(std::vector<ResourceValuation> valuations);

}  // namespace nbsim
