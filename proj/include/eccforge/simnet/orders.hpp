#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eccforge::simnet {

class OrdersError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OrderRecord {
    std::string invoice_no;
    std::string stock_code;
    std::string description;
    long long quantity = 0;
    std::string invoice_date;
    double unit_price = 0.0;
    std::string customer_id;
    std::string country;

    friend bool operator==(const OrderRecord&, const OrderRecord&) = default;
};

struct OrdersFile {
    std::vector<OrderRecord> records;
    std::size_t skipped = 0;
};

/// Splits one CSV line; double quotes group fields and "" escapes a quote.
std::vector<std::string> split_csv_line(std::string_view line);

/// Expects the online-retail header. Rows with the wrong field count,
/// quantity 0, negative price or unparseable numbers are skipped and counted.
OrdersFile parse_orders_csv(std::string_view text);
OrdersFile read_orders_csv(const std::filesystem::path& path);

/// Canonical compact JSON with keys in column order.
std::string serialize_order(const OrderRecord& order);
OrderRecord parse_order_json(std::string_view text);

} // namespace eccforge::simnet
