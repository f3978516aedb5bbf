#include "nbsim/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace nbsim {

DecisionMatrix DecisionMatrix::with_default_priorities(std::vector<Criterion> criteria) {
    DecisionMatrix m;
    m.criteria = std::move(criteria);
    m.priority_table = {
        {UserClass::HighEnd, 5},        {UserClass::Privileged, 4},
        {UserClass::Casual, 3},         {UserClass::Naive, 2},
        {UserClass::Underprivileged, 1},
    };
    return m;
}

int DecisionMatrix::priority_of(UserClass c) const {
    for (const auto& e : priority_table)
        if (e.user_class == c) return e.priority;
    throw std::invalid_argument("unmapped user class");
}

ResourceValuation value_for(const DecisionMatrix& matrix, UserClass user_class,
                            const std::string& resource_id) {
    const int priority = matrix.priority_of(user_class);
    ResourceValuation v;
    v.resource_id = resource_id;
    v.per_criterion.reserve(matrix.criteria.size());
    for (const auto& c : matrix.criteria) {
        const double p = c.weight * priority;
        v.per_criterion.push_back({c.name, p});
        v.value += p;
    }
    return v;
}

std::string max_value_resource(const std::vector<ResourceValuation>& valuations) {
    if (valuations.empty()) throw std::invalid_argument("no resources");
    const ResourceValuation* best = &valuations.front();
    for (const auto& v : valuations) {
        if (v.value > best->value ||
            (v.value == best->value && v.resource_id < best->resource_id)) {
            best = &v;
        }
    }
    return best->resource_id;
}

std::vector<ResourceValuation> sort_by_value(std::vector<ResourceValuation> valuations) {
    std::stable_sort(valuations.begin(), valuations.end(),
                     [](const ResourceValuation& a, const ResourceValuation& b) {
                         if (a.value != b.value) return a.value < b.value;
                         return a.resource_id < b.resource_id;
                     });
    return valuations;
}

}  // namespace nbsim
