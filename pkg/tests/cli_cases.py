"""Command-line cases with golden outputs; argv paths are relative to tests/data/inputs."""

CASES = [
    ("check_subalgebra_borel", ["check-subalgebra", "--span", "span_sl3_borel.json"], 0),
    ("check_subalgebra_e_f", ["check-subalgebra", "--span", "span_sl2_e_f.json"], 1),
    ("hull_diag_plus_e12", ["hull", "--span", "span_sl3_diag_plus_e12.json"], 1),
    ("hull_borel", ["hull", "--span", "span_sl3_borel.json"], 0),
    ("hull_irrational", ["hull", "--span", "span_sl3_diag_irrational.json"], 3),
    ("killing_sl2", ["killing", "--algebra", "sl2"], 0),
    ("killing_borel_span", ["killing", "--span", "span_sl2_borel.json"], 0),
    ("levi_top_left", ["levi", "--span", "span_sl3_top_left_sl2.json"], 0),
    ("levi_full", ["levi", "--span", "span_sl3_full.json"], 0),
    ("rank_borel", ["rank", "--span", "span_sl3_borel.json"], 0),
    ("rank_gl3_upper", ["rank", "--span", "span_gl3_upper.json"], 0),
    ("rank_not_solvable", ["rank", "--span", "span_sl3_full.json"], 2),
    ("jordan_3x3", ["jordan", "--matrix", "matrix_jordan_3x3.json"], 0),
    ("limit_h_minus_2te", ["limit", "--family", "family_sl2_h_minus_2te.json"], 0),
    ("limit_conjugated_sl2", ["limit", "--family", "family_sl3_conjugated_sl2.json", "--at", "inf"], 0),
    ("limit_at_zero", ["limit", "--family", "family_sl2_h_minus_2te.json", "--at", "0"], 0),
    ("scan_rank", ["scan-rank", "--family", "family_sl2_h_minus_2te.json"], 0),
    ("scan_levi", ["scan-levi", "--family", "family_sl3_conjugated_sl2.json"], 0),
    ("flatness_rank_drop", ["flatness", "--family", "family_sl2_rank_drop.json"], 1),
    ("flatness_constant", ["flatness", "--family", "family_sl2_h_minus_2te.json"], 0),
    ("integrate_borel", ["integrate", "--span", "span_sl2_borel.json"], 0),
    ("integrate_non_algebraic", ["integrate", "--span", "span_sl3_diag_plus_e12.json"], 2),
    ("group_check_borel", ["group-check", "--span", "span_sl3_borel.json", "--trials", "50", "--seed", "7"], 0),
    ("group_check_top_left", ["group-check", "--span", "span_sl3_top_left_sl2.json", "--trials", "20"], 0),
    ("orbit_dim_regular_nilpotent", ["orbit-dim", "--span", "span_sl3_regular_nilpotent.json"], 0),
    ("orbit_dim_e13", ["orbit-dim", "--span", "span_sl3_e13.json"], 0),
    ("classify_e", ["classify-sl2", "--span", "span_sl2_e.json"], 0),
    ("classify_h_plus_e", ["classify-sl2", "--span", "span_sl2_h_plus_e.json"], 0),
    ("sl3_slice_2", ["sl3-slice", "--height", "2"], 0),
    ("sl3_slice_bad_height", ["sl3-slice", "--height", "0"], 2),
    ("bouquet_consistent", ["validate-bouquet", "--bouquet", "bouquet_three_consistent.json"], 0),
    ("bouquet_inconsistent", ["validate-bouquet", "--bouquet", "bouquet_three_inconsistent.json"], 1),
    ("unknown_command", ["frobnicate"], 2),
    ("missing_file", ["hull", "--span", "no_such_file.json"], 2),
    ("missing_flag", ["hull"], 2),
]
