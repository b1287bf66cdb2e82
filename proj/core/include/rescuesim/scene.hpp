#pragma once

#include "rescuesim/vec3.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rescuesim {

enum class TaskKind { Fire, Flood, Wind };

const char* to_string(TaskKind task);
TaskKind task_from_string(const std::string& s);

// Per-category attributes. Fire/flood pools must define a meaningful
// ignition point and waterproof flag; the wind pool must define
// susceptibility. Pools ship as data files (see core/data), not code.
struct ObjectCategory {
    std::string name;
    double value = 0.0;             // rescue points, > 0
    bool waterproof = false;
    double ignition_point = 0.0;    // deg C, above room temperature
    int burn_duration = 0;          // frames from ignition to burnt
    double density = 0.0;           // kg/m^3
    double drag_coefficient = 0.0;  // dimensionless
    bool wind_susceptible = false;
};

struct CategoryPool {
    std::vector<ObjectCategory> categories;

    const ObjectCategory* find(const std::string& name) const;
    // Categories eligible as rescue targets (everything except containers).
    std::vector<const ObjectCategory*> target_categories() const;
    static bool is_container_category(const std::string& name);
};

CategoryPool load_category_pool(const std::filesystem::path& path);
void save_category_pool(const CategoryPool& pool, const std::filesystem::path& path);

enum class ObjectStatus { Normal, Burning, Burnt };

const char* to_string(ObjectStatus s);

enum class Hand { Left, Right };

// One simulated object. Pose is the AABB center plus a yaw heading; all
// collision and volume math uses the axis-aligned box. Velocity is stored
// in m/s; per-frame displacement is velocity * frame_dt.
struct ObjectInstance {
    int id = 0;
    ObjectCategory category;     // resolved copy from the pool
    Vec3 position;               // AABB center
    Vec3 velocity;               // m/s
    double heading = 0.0;        // degrees, cosmetic yaw
    Vec3 half_extents{0.1, 0.1, 0.1};
    ObjectStatus status = ObjectStatus::Normal;
    double temperature = 20.0;   // deg C
    bool damaged = false;        // latched; halves scoring value
    bool is_target = false;
    bool is_container = false;
    std::optional<Hand> held_by;

    // Runtime bookkeeping, not serialized.
    int ignition_frame = -1;
    bool rescued = false;
    bool out_of_reach = false;   // blown out of bounds (wind)

    double volume() const { return 8.0 * half_extents.x * half_extents.y * half_extents.z; }
    double mass() const { return category.density * volume(); }
    double bottom() const { return position.y - half_extents.y; }
    double top() const { return position.y + half_extents.y; }
    // Active objects participate in physics, hazards and observation.
    bool active() const { return !rescued && !out_of_reach; }
};

// Scoring value of a target: full category value, halved once damaged.
double effective_value(const ObjectInstance& obj);

// Static geometry: walls, furniture. Pose as for objects.
struct StaticBox {
    std::string name;
    Vec3 position;
    double heading = 0.0;
    Vec3 half_extents{0.5, 0.5, 0.5};
};

struct AgentSpawn {
    Vec3 position;
    double heading = 0.0;  // degrees; 0 faces +z
};

// Axis-aligned floor rectangle, floor at y = 0.
struct FloorBounds {
    double min_x = 0.0, min_z = 0.0;
    double max_x = 0.0, max_z = 0.0;

    double width() const { return max_x - min_x; }
    double depth() const { return max_z - min_z; }
    bool contains(const Vec3& p) const {
        return p.x >= min_x && p.x <= max_x && p.z >= min_z && p.z <= max_z;
    }
};

// Which edge of the floor rectangle a flood enters from.
enum class FloorEdge { MinX, MaxX, MinZ, MaxZ };

const char* to_string(FloorEdge e);
FloorEdge floor_edge_from_string(const std::string& s);

struct GridCoord {
    int ix = 0;
    int iz = 0;
    bool operator==(const GridCoord&) const = default;
    auto operator<=>(const GridCoord&) const = default;
};

// Task-specific hazard sources baked into a scene.
struct HazardSpec {
    std::vector<GridCoord> fire_cells;  // fire: initially burning floor cells
    FloorEdge flood_edge = FloorEdge::MinX;
    Vec3 wind_direction{1, 0, 0};       // unit horizontal direction
};

struct Scene {
    int version = 1;
    TaskKind task = TaskKind::Fire;
    uint64_t seed = 0;
    FloorBounds bounds;
    std::vector<StaticBox> statics;
    std::vector<ObjectInstance> objects;
    AgentSpawn agent_spawn;
    HazardSpec hazard;

    const ObjectInstance* find_object(int id) const;
    ObjectInstance* find_object(int id);
    double total_target_value() const;
};

// How much two AABBs interpenetrate (min over axes), <= 0 when separated.
double box_interpenetration(const Vec3& ca, const Vec3& ha, const Vec3& cb, const Vec3& hb);

// Checks every documented invariant; throws InvariantError naming the
// offending element. Rejects rather than repairs.
void validate_scene(const Scene& scene);

} // namespace rescuesim
