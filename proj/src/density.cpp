#include "adrg/density.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace adrg {

DensityTable::DensityTable(std::vector<Row> rows) : rows_(std::move(rows)) {
    if (rows_.size() < 2) fail("InvalidDensityTable", "need at least two rows");
    for (size_t i = 1; i < rows_.size(); ++i) {
        if (rows_[i].altitude_km <= rows_[i - 1].altitude_km)
            fail("InvalidDensityTable", "altitudes must be strictly increasing");
        if (rows_[i].density_kg_m3 <= 0.0 || rows_[i - 1].density_kg_m3 <= 0.0)
            fail("InvalidDensityTable", "densities must be positive");
    }
}

DensityTable DensityTable::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot open density table " + path);
    std::vector<Row> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        Row r{};
        char comma = 0;
        if (!(ss >> r.altitude_km >> comma >> r.density_kg_m3) || comma != ',')
            fail("ParseError", path + " line " + std::to_string(lineno));
        rows.push_back(r);
    }
    return DensityTable(std::move(rows));
}

double DensityTable::density(double altitude_km) const {
    if (altitude_km < rows_.front().altitude_km)
        fail("AltitudeOutOfRange",
             "altitude " + std::to_string(altitude_km) + " km below model floor");
    if (altitude_km >= rows_.back().altitude_km) return 0.0;

    size_t lo = 0, hi = rows_.size() - 1;
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (rows_[mid].altitude_km <= altitude_km) lo = mid;
        else hi = mid;
    }
    const Row& a = rows_[lo];
    const Row& b = rows_[hi];
    double t = (altitude_km - a.altitude_km) / (b.altitude_km - a.altitude_km);
    // Exponential interpolation through the two bounding rows.
    return a.density_kg_m3 * std::pow(b.density_kg_m3 / a.density_kg_m3, t);
}

double DensityTable::log_slope(double altitude_km) const {
    if (altitude_km < rows_.front().altitude_km)
        fail("AltitudeOutOfRange", "altitude below model floor");
    if (altitude_km >= rows_.back().altitude_km) return 0.0;
    size_t lo = 0, hi = rows_.size() - 1;
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (rows_[mid].altitude_km <= altitude_km) lo = mid;
        else hi = mid;
    }
    return std::log(rows_[hi].density_kg_m3 / rows_[lo].density_kg_m3)
         / (rows_[hi].altitude_km - rows_[lo].altitude_km);
}

const DensityTable& DensityTable::layered_exponential() {
    static const DensityTable table({
        {  100.0, 5.297000e-07 },
        {  110.0, 9.661000e-08 },
        {  120.0, 2.438000e-08 },
        {  130.0, 8.484000e-09 },
        {  140.0, 3.845000e-09 },
        {  150.0, 2.070000e-09 },
        {  160.0, 1.327846e-09 },
        {  180.0, 5.464000e-10 },
        {  200.0, 2.789000e-10 },
        {  220.0, 1.626893e-10 },
        {  250.0, 7.248000e-11 },
        {  280.0, 3.751106e-11 },
        {  300.0, 2.418000e-11 },
        {  320.0, 1.665293e-11 },
        {  350.0, 9.518000e-12 },
        {  380.0, 5.421171e-12 },
        {  400.0, 3.725000e-12 },
        {  420.0, 2.646596e-12 },
        {  450.0, 1.585000e-12 },
        {  480.0, 9.679164e-13 },
        {  500.0, 6.967000e-13 },
        {  550.0, 3.182782e-13 },
        {  600.0, 1.454000e-13 },
        {  650.0, 7.249003e-14 },
        {  700.0, 3.614000e-14 },
        {  750.0, 2.056299e-14 },
        {  800.0, 1.170000e-14 },
        {  850.0, 7.833689e-15 },
        {  900.0, 5.245000e-15 },
        {  950.0, 3.979310e-15 },
        { 1000.0, 3.019000e-15 },
        { 1100.0, 2.078801e-15 },
        { 1200.0, 1.431406e-15 },
        { 1300.0, 9.856270e-16 },
        { 1400.0, 6.786758e-16 },
        { 1500.0, 4.673177e-16 },
    });
    return table;
}

const DensityTable& DensityTable::harris_priester() {
    // Mean of the Harris-Priester min/max activity columns, g/km^3
    // converted to kg/m^3 (1 g/km^3 = 1e-12 kg/m^3).
    static const DensityTable table({
        { 100.0, 4.974e-7 },
        { 120.0, 2.490e-8 },
        { 130.0, 8.544e-9 },
        { 140.0, 3.979e-9 },
        { 150.0, 2.169e-9 },
        { 160.0, 1.304e-9 },
        { 170.0, 8.383e-10 },
        { 180.0, 5.647e-10 },
        { 190.0, 3.957e-10 },
        { 200.0, 2.860e-10 },
        { 210.0, 2.118e-10 },
        { 220.0, 1.597e-10 },
        { 230.0, 1.225e-10 },
        { 240.0, 9.529e-11 },
        { 250.0, 7.509e-11 },
        { 260.0, 5.979e-11 },
        { 270.0, 4.806e-11 },
        { 280.0, 3.896e-11 },
        { 290.0, 3.183e-11 },
        { 300.0, 2.617e-11 },
        { 320.0, 1.805e-11 },
        { 340.0, 1.270e-11 },
        { 360.0, 9.097e-12 },
        { 380.0, 6.615e-12 },
        { 400.0, 4.871e-12 },
        { 420.0, 3.621e-12 },
        { 440.0, 2.723e-12 },
        { 460.0, 2.066e-12 },
        { 480.0, 1.580e-12 },
        { 500.0, 1.217e-12 },
        { 520.0, 9.435e-13 },
        { 540.0, 7.356e-13 },
        { 560.0, 5.769e-13 },
        { 580.0, 4.545e-13 },
        { 600.0, 3.599e-13 },
        { 620.0, 2.862e-13 },
        { 640.0, 2.286e-13 },
        { 660.0, 1.834e-13 },
        { 680.0, 1.477e-13 },
        { 700.0, 1.195e-13 },
        { 720.0, 9.699e-14 },
        { 740.0, 7.901e-14 },
        { 760.0, 6.468e-14 },
        { 780.0, 5.313e-14 },
        { 800.0, 4.383e-14 },
        { 840.0, 3.105e-14 },
        { 880.0, 2.265e-14 },
        { 920.0, 1.676e-14 },
        { 960.0, 1.258e-14 },
        { 1000.0, 9.626e-15 },
    });
    return table;
}

const DensityTable& density_table(DensityModel model) {
    switch (model) {
        case DensityModel::harris_priester_table:
            return DensityTable::harris_priester();
        case DensityModel::layered_exponential:
        default:
            return DensityTable::layered_exponential();
    }
}

} // namespace adrg
