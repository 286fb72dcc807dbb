//! Published 10-fold cross-validation counts for three ambiguity classes.
//!
//! Each fixture carries the per-run count rows (training tokens, training
//! hapax tokens, unseen held-out tokens) together with the estimates,
//! rounded expected counts and paired t statistics that were reported for
//! them. The count rows can be fed through [`FoldResult::from_counts`] to
//! recompute everything else.

use crate::crossval::FoldResult;
use crate::error::Result;

#[derive(Debug, Clone, Copy)]
pub struct CrossValFixture {
    pub name: &'static str,
    /// Numerator function first; the reported estimates are for it.
    pub labels: [&'static str; 2],
    pub train: [[u64; 10]; 2],
    pub hapax: [[u64; 10]; 2],
    pub unseen: [[u64; 10]; 2],
    pub omle: [f64; 10],
    pub hmle: [f64; 10],
    pub expected_o: [[u64; 10]; 2],
    pub expected_h: [[u64; 10]; 2],
    pub reported_t_overall: f64,
    pub reported_t_hapax: f64,
}

impl CrossValFixture {
    /// Recomputes the ten runs from the count rows.
    pub fn folds(&self) -> Result<Vec<FoldResult>> {
        (0..10)
            .map(|i| {
                FoldResult::from_counts(
                    i + 1,
                    vec![self.train[0][i], self.train[1][i]],
                    vec![self.hapax[0][i], self.hapax[1][i]],
                    vec![self.unseen[0][i], self.unseen[1][i]],
                )
            })
            .collect()
    }
}

/// Dutch -en verb forms: infinitive vs. finite plural.
pub const DUTCH_INF_PL: CrossValFixture = CrossValFixture {
    name: "dutch-en-inf-pl",
    labels: ["inf", "pl"],
    train: [
        [
            19509, 19527, 19536, 19526, 19507, 19511, 19533, 19524, 19569, 19585,
        ],
        [8953, 8935, 8926, 8936, 8955, 8952, 8930, 8939, 8894, 8878],
    ],
    hapax: [
        [1075, 1086, 1066, 1068, 1092, 1091, 1098, 1066, 1094, 1079],
        [185, 184, 180, 182, 179, 185, 184, 178, 179, 180],
    ],
    unseen: [
        [120, 114, 133, 125, 133, 123, 102, 118, 121, 127],
        [24, 19, 20, 18, 18, 16, 15, 23, 23, 21],
    ],
    omle: [
        0.685, 0.686, 0.686, 0.686, 0.685, 0.685, 0.686, 0.686, 0.688, 0.688,
    ],
    hmle: [
        0.853, 0.855, 0.856, 0.854, 0.859, 0.855, 0.856, 0.857, 0.859, 0.857,
    ],
    expected_o: [
        [99, 91, 105, 98, 103, 95, 80, 97, 99, 102],
        [45, 42, 48, 45, 48, 44, 37, 44, 45, 46],
    ],
    expected_h: [
        [123, 114, 131, 122, 130, 119, 100, 121, 124, 127],
        [21, 19, 22, 21, 21, 20, 17, 20, 20, 21],
    ],
    reported_t_overall: 13.4,
    reported_t_hapax: 0.96,
};

/// English -ed verb forms: past participle (VBN) vs. simple past (VBD).
pub const ENGLISH_VBN_VBD: CrossValFixture = CrossValFixture {
    name: "english-ed-vbn-vbd",
    labels: ["vbn", "vbd"],
    train: [
        [
            20386, 20360, 20376, 20372, 20388, 20451, 20431, 20431, 20426, 20400,
        ],
        [
            13845, 13871, 13855, 13859, 13843, 13781, 13801, 13801, 13806, 13832,
        ],
    ],
    hapax: [
        [701, 695, 678, 700, 693, 705, 690, 692, 710, 711],
        [395, 401, 405, 406, 406, 403, 404, 405, 393, 403],
    ],
    unseen: [
        [80, 86, 101, 83, 71, 61, 85, 75, 72, 77],
        [49, 52, 37, 41, 43, 45, 41, 50, 48, 42],
    ],
    omle: [
        0.596, 0.595, 0.595, 0.595, 0.596, 0.597, 0.597, 0.597, 0.597, 0.596,
    ],
    hmle: [
        0.640, 0.634, 0.626, 0.633, 0.631, 0.636, 0.631, 0.631, 0.644, 0.638,
    ],
    expected_o: [
        [77, 82, 82, 74, 68, 63, 75, 75, 72, 71],
        [52, 56, 56, 50, 46, 43, 51, 50, 48, 48],
    ],
    expected_h: [
        [83, 88, 86, 78, 72, 67, 79, 79, 77, 76],
        [46, 50, 52, 46, 42, 39, 47, 46, 43, 43],
    ],
    reported_t_overall: 2.47,
    reported_t_hapax: 0.48,
};

/// Dutch -en forms: verb vs. plural noun.
pub const DUTCH_VERB_NOUN: CrossValFixture = CrossValFixture {
    name: "dutch-en-verb-noun",
    labels: ["v", "n"],
    train: [
        [
            25237, 25283, 25267, 25245, 25292, 25267, 25205, 25207, 25261, 25294,
        ],
        [
            18306, 18260, 18277, 18299, 18252, 18277, 18339, 18337, 18283, 18250,
        ],
    ],
    hapax: [
        [1312, 1295, 1287, 1317, 1284, 1298, 1298, 1297, 1292, 1298],
        [2913, 2910, 2939, 2942, 2901, 2922, 2979, 2969, 2936, 2931],
    ],
    unseen: [
        [124, 131, 154, 142, 148, 143, 148, 156, 153, 139],
        [325, 344, 327, 334, 352, 335, 289, 301, 327, 319],
    ],
    omle: [
        0.580, 0.581, 0.580, 0.580, 0.581, 0.580, 0.579, 0.579, 0.580, 0.581,
    ],
    hmle: [
        0.311, 0.308, 0.305, 0.309, 0.307, 0.308, 0.303, 0.304, 0.306, 0.307,
    ],
    expected_o: [
        [260, 276, 279, 276, 290, 277, 253, 265, 278, 266],
        [189, 199, 202, 200, 210, 201, 184, 192, 202, 192],
    ],
    expected_h: [
        [139, 146, 146, 147, 153, 147, 133, 139, 147, 141],
        [310, 329, 335, 329, 347, 331, 304, 318, 333, 317],
    ],
    reported_t_overall: 95.95,
    reported_t_hapax: 0.12,
};

pub const ALL: [CrossValFixture; 3] = [DUTCH_INF_PL, ENGLISH_VBN_VBD, DUTCH_VERB_NOUN];
