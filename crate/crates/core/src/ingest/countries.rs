//! Country names, ISO 3166 alpha-3 codes and the middle-income
//! classification used by the replication dataset.

/// Lower-middle-income countries, in listing order.
pub const LOWER_MIDDLE: &[(&str, &str)] = &[
    ("Algeria", "DZA"),
    ("Angola", "AGO"),
    ("Bangladesh", "BGD"),
    ("Benin", "BEN"),
    ("Bhutan", "BTN"),
    ("Bolivia", "BOL"),
    ("Cabo Verde", "CPV"),
    ("Cambodia", "KHM"),
    ("Cameroon", "CMR"),
    ("Comoros", "COM"),
    ("Congo Republic", "COG"),
    ("Cote d'Ivoire", "CIV"),
    ("Djibouti", "DJI"),
    ("Egypt Arab Republic", "EGY"),
    ("El Salvador", "SLV"),
    ("Ghana", "GHA"),
    ("Haiti", "HTI"),
    ("Honduras", "HND"),
    ("India", "IND"),
    ("Indonesia", "IDN"),
    ("Iran Islamic Republic", "IRN"),
    ("Kenya", "KEN"),
    ("Kyrgyz Republic", "KGZ"),
    ("Lao PDR", "LAO"),
    ("Lesotho", "LSO"),
    ("Mauritania", "MRT"),
    ("Mongolia", "MNG"),
    ("Morocco", "MAR"),
    ("Myanmar", "MMR"),
    ("Nepal", "NPL"),
    ("Nicaragua", "NIC"),
    ("Nigeria", "NGA"),
    ("Pakistan", "PAK"),
    ("Papua New Guinea", "PNG"),
    ("Philippines", "PHL"),
    ("Sao Tome and Principe", "STP"),
    ("Senegal", "SEN"),
    ("Solomon Islands", "SLB"),
    ("Sri Lanka", "LKA"),
    ("Tajikistan", "TJK"),
    ("Tanzania", "TZA"),
    ("Timor-Leste", "TLS"),
    ("Tunisia", "TUN"),
    ("Ukraine", "UKR"),
    ("Uzbekistan", "UZB"),
    ("Vietnam", "VNM"),
    ("Zambia", "ZMB"),
    ("Zimbabwe", "ZWE"),
];

/// Upper-middle-income countries, in listing order.
pub const UPPER_MIDDLE: &[(&str, &str)] = &[
    ("Albania", "ALB"),
    ("Argentina", "ARG"),
    ("Armenia", "ARM"),
    ("Azerbaijan", "AZE"),
    ("Belarus", "BLR"),
    ("Bosnia and Herzegovina", "BIH"),
    ("Botswana", "BWA"),
    ("Brazil", "BRA"),
    ("Bulgaria", "BGR"),
    ("China", "CHN"),
    ("Colombia", "COL"),
    ("Costa Rica", "CRI"),
    ("Cuba", "CUB"),
    ("Dominican Republic", "DOM"),
    ("Ecuador", "ECU"),
    ("Equatorial Guinea", "GNQ"),
    ("Fiji", "FJI"),
    ("Gabon", "GAB"),
    ("Georgia", "GEO"),
    ("Guatemala", "GTM"),
    ("Guyana", "GUY"),
    ("Iraq", "IRQ"),
    ("Jamaica", "JAM"),
    ("Jordan", "JOR"),
    ("Kazakhstan", "KAZ"),
    ("Lebanon", "LBN"),
    ("Libya", "LBY"),
    ("Malaysia", "MYS"),
    ("Maldives", "MDV"),
    ("Mauritius", "MUS"),
    ("Mexico", "MEX"),
    ("Moldova", "MDA"),
    ("Montenegro", "MNE"),
    ("Namibia", "NAM"),
    ("North Macedonia", "MKD"),
    ("Panama", "PAN"),
    ("Paraguay", "PRY"),
    ("Peru", "PER"),
    ("Romania", "ROU"),
    ("Russian Federation", "RUS"),
    ("Serbia", "SRB"),
    ("South Africa", "ZAF"),
    ("Suriname", "SUR"),
    ("Thailand", "THA"),
    ("Turkey", "TUR"),
    ("Turkmenistan", "TKM"),
];

pub const LOWER_LABEL: &str = "lower-middle";
pub const UPPER_LABEL: &str = "upper-middle";

/// ISO alpha-3 code for a country name from the bundled table. Codes pass
/// through unchanged.
pub fn to_code(name_or_code: &str) -> Option<&'static str> {
    let key = name_or_code.trim();
    LOWER_MIDDLE
        .iter()
        .chain(UPPER_MIDDLE)
        .find(|(name, code)| name.eq_ignore_ascii_case(key) || code.eq_ignore_ascii_case(key))
        .map(|(_, code)| *code)
}

pub fn name_of(code: &str) -> Option<&'static str> {
    LOWER_MIDDLE
        .iter()
        .chain(UPPER_MIDDLE)
        .find(|(_, c)| *c == code)
        .map(|(name, _)| *name)
}
