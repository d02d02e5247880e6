#ifndef MECSIM_DESCRIPTORS_RESOURCE_VECTOR_HPP
#define MECSIM_DESCRIPTORS_RESOURCE_VECTOR_HPP

#include <cstdint>
#include <string>

#include "mecsim/errors.hpp"

namespace mecsim {

// (ram bytes, disk bytes, cpu instructions/second). Used for host budgets,
// app demands and allocations. All components are non-negative; allocation
// arithmetic errors out instead of wrapping below zero.
struct ResourceVector {
    int64_t ram = 0;
    int64_t disk = 0;
    int64_t cpu = 0;

    bool operator==(const ResourceVector&) const = default;

    ResourceVector operator+(const ResourceVector& o) const {
        return {ram + o.ram, disk + o.disk, cpu + o.cpu};
    }

    ResourceVector operator-(const ResourceVector& o) const {
        if (o.ram > ram || o.disk > disk || o.cpu > cpu)
            throw NegativeResourceError("resource subtraction below zero");
        return {ram - o.ram, disk - o.disk, cpu - o.cpu};
    }

    std::string str() const {
        return "(ram=" + std::to_string(ram) + ", disk=" + std::to_string(disk) +
               ", cpu=" + std::to_string(cpu) + ")";
    }
};

// true iff demand <= free component-wise.
inline bool resourceFits(const ResourceVector& demand, const ResourceVector& free) {
    return demand.ram <= free.ram && demand.disk <= free.disk &&
           demand.cpu <= free.cpu;
}

// Parses "10 MB", "32MB", "1500" etc. Suffixes are decimal: kB=1e3, MB=1e6,
// GB=1e9. Bare numbers are bytes (or instructions/second for cpu).
int64_t parseQuantity(const std::string& text);

} // namespace mecsim

#endif
