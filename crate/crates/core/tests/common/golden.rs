//! Tables transcribed from the source text. Strings keep the original
//! notation, typos included; fixes are applied by the tests that use them.

#![allow(dead_code)]

/// (letter, domain, image, k-part)
pub type ListingRow = (char, [i8; 4], [i8; 4], [i8; 4]);

pub const LISTING_3: [ListingRow; 12] = [
    ('a', [1, 1, 0, 0], [-1, 1, 0, 0], [-1, 1, 1, 1]),
    ('b', [1, -1, 0, 0], [-1, -1, 0, 0], [-1, 1, 1, 1]),
    ('c', [1, 0, 1, 0], [1, 0, -1, 0], [1, 1, -1, 1]),
    ('d', [-1, 0, 1, 0], [-1, 0, -1, 0], [1, 1, -1, 1]),
    ('e', [0, 1, 1, 0], [0, -1, -1, 0], [-1, -1, -1, 1]),
    ('f', [0, 1, -1, 0], [0, -1, 1, 0], [-1, -1, -1, 1]),
    ('g', [1, 0, 0, 1], [-1, 0, 0, 1], [-1, -1, -1, 1]),
    ('h', [1, 0, 0, -1], [-1, 0, 0, -1], [-1, -1, -1, 1]),
    ('i', [0, 1, 0, 1], [0, -1, 0, -1], [-1, -1, 1, -1]),
    ('j', [0, 1, 0, -1], [0, -1, 0, 1], [-1, -1, 1, -1]),
    ('k', [0, 0, 1, 1], [0, 0, 1, -1], [1, 1, 1, -1]),
    ('l', [0, 0, -1, 1], [0, 0, -1, -1], [1, 1, 1, -1]),
];

pub const LISTING_1011: [ListingRow; 12] = [
    ('a', [1, 1, 0, 0], [-1, 1, 0, 0], [-1, 1, 1, 1]),
    ('b', [1, -1, 0, 0], [-1, -1, 0, 0], [-1, 1, 1, 1]),
    ('c', [1, 0, 1, 0], [1, 0, -1, 0], [1, 1, -1, 1]),
    ('d', [-1, 0, 1, 0], [-1, 0, -1, 0], [1, 1, -1, 1]),
    ('e', [0, 1, 1, 0], [0, -1, -1, 0], [-1, -1, -1, -1]),
    ('f', [0, 1, -1, 0], [0, -1, 1, 0], [-1, -1, -1, -1]),
    ('g', [1, 0, 0, 1], [-1, 0, 0, -1], [-1, -1, -1, -1]),
    ('h', [1, 0, 0, -1], [-1, 0, 0, 1], [-1, -1, -1, -1]),
    ('i', [0, 1, 0, 1], [0, -1, 0, 1], [1, -1, 1, 1]),
    ('j', [0, 1, 0, -1], [0, -1, 0, -1], [1, -1, 1, 1]),
    ('k', [0, 0, 1, 1], [0, 0, 1, -1], [1, 1, 1, -1]),
    ('l', [0, 0, -1, 1], [0, 0, -1, -1], [1, 1, 1, -1]),
];

/// Side and its centre; entries are `0`, `±1/√2`, `±1±√2`.
pub const CENTRES: [([i8; 4], [&str; 3]); 24] = [
    ([1, 1, 0, 0], ["1/√2", "1/√2", "0"]),
    ([-1, 1, 0, 0], ["-1/√2", "1/√2", "0"]),
    ([1, -1, 0, 0], ["1/√2", "-1/√2", "0"]),
    ([-1, -1, 0, 0], ["-1/√2", "-1/√2", "0"]),
    ([1, 0, 1, 0], ["1/√2", "0", "1/√2"]),
    ([1, 0, -1, 0], ["1/√2", "0", "-1/√2"]),
    ([-1, 0, 1, 0], ["-1/√2", "0", "1/√2"]),
    ([-1, 0, -1, 0], ["-1/√2", "0", "-1/√2"]),
    ([0, 1, 1, 0], ["0", "1/√2", "1/√2"]),
    ([0, -1, -1, 0], ["0", "-1/√2", "-1/√2"]),
    ([0, 1, -1, 0], ["0", "1/√2", "-1/√2"]),
    ([0, -1, 1, 0], ["0", "-1/√2", "1/√2"]),
    ([1, 0, 0, 1], ["1+√2", "0", "0"]),
    ([-1, 0, 0, -1], ["1-√2", "0", "0"]),
    ([1, 0, 0, -1], ["-1+√2", "0", "0"]),
    ([-1, 0, 0, 1], ["-1-√2", "0", "0"]),
    ([0, 1, 0, 1], ["0", "1+√2", "0"]),
    ([0, -1, 0, 1], ["0", "-1-√2", "0"]),
    ([0, 1, 0, -1], ["0", "-1+√2", "0"]),
    ([0, -1, 0, -1], ["0", "1-√2", "0"]),
    ([0, 0, 1, 1], ["0", "0", "1+√2"]),
    ([0, 0, 1, -1], ["0", "0", "-1+√2"]),
    ([0, 0, -1, 1], ["0", "0", "-1-√2"]),
    ([0, 0, -1, -1], ["0", "0", "1-√2"]),
];

/// Labelled centre table printed for manifold 3.
pub const LABELLED_CENTRES_3: [(&str, [i8; 4], [&str; 3]); 24] = [
    ("A", [1, 1, 0, 0], ["1/√2", "1/√2", "0"]),
    ("A'", [-1, 1, 0, 0], ["-1/√2", "1/√2", "0"]),
    ("B", [1, -1, 0, 0], ["1/√2", "-1/√2", "0"]),
    ("B'", [-1, -1, 0, 0], ["-1/√2", "-1/√2", "0"]),
    ("C", [1, 0, 1, 0], ["1/√2", "0", "1/√2"]),
    ("C'", [1, 0, -1, 0], ["1/√2", "0", "-1/√2"]),
    ("D", [-1, 0, 1, 0], ["-1/√2", "0", "1/√2"]),
    ("D'", [-1, 0, -1, 0], ["-1/√2", "0", "-1/√2"]),
    ("E", [0, 1, 1, 0], ["0", "1/√2", "1/√2"]),
    ("E'", [0, -1, -1, 0], ["0", "-1/√2", "-1/√2"]),
    ("F", [0, 1, -1, 0], ["0", "1/√2", "-1/√2"]),
    ("F'", [0, -1, 1, 0], ["0", "-1/√2", "1/√2"]),
    ("G", [1, 0, 0, 1], ["1+√2", "0", "0"]),
    ("G'", [-1, 0, 0, -1], ["1-√2", "0", "0"]),
    ("H", [1, 0, 0, -1], ["-1+√2", "0", "0"]),
    ("H'", [-1, 0, 0, 1], ["-1-√2", "0", "0"]),
    ("I", [0, 1, 0, 1], ["0", "1+√2", "0"]),
    ("I'", [0, -1, 0, 1], ["0", "-1-√2", "0"]),
    ("J", [0, 1, 0, -1], ["0", "-1+√2", "0"]),
    ("J'", [0, -1, 0, -1], ["0", "1-√2", "0"]),
    ("K", [0, 0, 1, 1], ["0", "0", "1+√2"]),
    ("K'", [0, 0, 1, -1], ["0", "0", "-1+√2"]),
    ("L", [0, 0, -1, 1], ["0", "0", "-1-√2"]),
    ("L'", [0, 0, -1, -1], ["0", "0", "1-√2"]),
];

/// Cycle rows: face, then alternating step and face, ending at the start.
pub const CYCLES_3: [&str; 24] = [
    "A∩C a A'∩D d A'∩D' a^-1 A∩C' c^-1 A∩C",
    "A∩G a A'∩G' g^-1 B∩G b B'∩G' g^-1 A∩G",
    "A∩H a A'∩H' h^-1 B∩H b B'∩H' h^-1 A∩H",
    "A∩E a A'∩E e B∩E' b B'∩E' e^-1 A∩E",
    "A∩F a A'∩F f B∩F' b B'∩F' f^-1 A∩F",
    "A∩I a A'∩I i B∩I' b B'∩I' i^-1 A∩I",
    "A∩J a A'∩J j B∩J' b B'∩J' j^-1 A∩J",
    "B∩C b B'∩D d B'∩D' b^-1 B∩C' c^-1 B∩C",
    "C∩G c C'∩G g D∩G' d D'∩G' g^-1 C∩G",
    "C∩H c C'∩H h D∩H' d D'∩H' h^-1 C∩H",
    "C∩E c C'∩F f D∩F' d D'∩E' e^-1 C∩E",
    "C∩F' c C'∩E' e^-1 D∩E d D'∩F f C∩F'",
    "C∩K c C'∩L l C'∩L' c^-1 C∩K' k^-1 C∩K",
    "D∩K d D'∩L l D'∩L' d^-1 D∩K' k^-1 D∩K",
    "G∩I g G'∩J' j^-1 H∩J h H'∩I' i^-1 G∩I",
    "G∩J' g G'∩I i H∩I' h H'∩J j G∩J'",
    "G∩K g G'∩L l H'∩L' h^-1 H∩K' k^-1 G∩K",
    "G∩L g G'∩K k H'∩K' h^-1 H∩L' l^-1 G∩L",
    "E∩I e E'∩J' j^-1 F∩J f F'∩I' i^-1 E∩I",
    "E∩J e E'∩I' i^-1 F∩I f F'∩J' j^-1 E∩J",
    "E∩K e E'∩L l E'∩L' e^-1 E∩K' k^-1 E∩K",
    "F∩L f F'∩K k F'∩K' f^-1 F∩L' l^-1 F∩L",
    "I∩K i I'∩K' k^-1 J'∩K j^-1 J∩K' k^-1 I∩K",
    "I∩L i I'∩L' l^-1 J'∩L j^-1 J∩L' l^-1 I∩L",
];

pub const CYCLES_1011: [&str; 24] = [
    "A∩C a A'∩D d A'∩D' a^-1 A∩C' c^-1 A∩C",
    "A∩G a A'∩H' h^-1 B∩H b B'∩G' g^-1 A∩G",
    "A∩H a A'∩G' g^-1 B∩G b B'∩H' h^-1 A∩H",
    "A∩E a A'∩E e B∩E' b B'∩E' e^-1 A∩E",
    "A∩F a A'∩F f B∩F' b B'∩F' f^-1 A∩F",
    "A∩I a A'∩I i B'∩i' b^-1 B∩I' i^-1 A∩I",
    "A∩J a A'∩J j B'∩J' b^-1 B∩J' j^-1 A∩J",
    "B∩C b B'∩D d B'∩D' b^-1 B∩C' c^-1 B∩C",
    "C∩G c C'∩G g D∩G' d D'∩G' g^-1 C∩G",
    "C∩H c C'∩H h D∩H' d D'∩H' h^-1 C∩H",
    "C∩E c C'∩F f D∩F' d D'∩E' e^-1 C∩E",
    "C∩F' c C'∩E' e^-1 D∩E d D'∩F f C∩F'",
    "C∩K c C'∩L l C'∩L' c^-1 C∩K' k^-1 C∩K",
    "D∩K d D'∩L l D'∩L' d^-1 D∩K' k^-1 D∩K",
    "G∩I g G'∩J' j^-1 G'∩J g^-1 G∩I' i^-1 G∩I",
    "G∩K g G'∩L' l^-1 H'∩L h^-1 H∩K' k^-1 G∩K",
    "G∩L g G'∩K' k^-1 H'∩K h^-1 H∩L' l^-1 G∩L",
    "H∩J h H'∩I' i^-1 H'∩I h^-1 H∩J' j^-1 H∩J",
    "E∩I e E'∩J' j^-1 F∩J f F'∩I' i^-1 E∩I",
    "E∩J e E'∩I' i^-1 F∩I f F'∩J' j^-1 E∩J",
    "E∩K e E'∩L' l^-1 E'∩L e^-1 E∩K' k^-1 E∩K",
    "F∩L f F'∩K' k^-1 F'∩K f^-1 F∩L' l^-1 F∩L",
    "I∩K i I'∩K k J'∩K' j^-1 J∩K' k^-1 I∩K",
    "I∩L i I'∩L l J'∩L' j^-1 J∩L' l^-1 I∩L",
];

/// Colour tables per panel, in the order xy, xz, yz, special.
pub const COLOURS_3: [[(&str, &str); 6]; 4] = [
    [
        ("green", "A∩H a A'∩H' h^-1 B∩H b B'∩H' h^-1 A∩H"),
        ("red", "A∩J a A'∩J j B∩J' b B'∩J' j^-1 A∩J"),
        ("brown", "A∩G a A'∩G' g^-1 B∩G b B'∩G' g^-1 A∩G"),
        ("blue", "A∩I a A'∩I i B∩I' b B'∩I' i^-1 A∩I"),
        ("pink", "G∩I g G'∩J' j^-1 H∩J h H'∩I' i^-1 G∩I"),
        ("black", "G∩J' g G'∩I i H∩I' h H'∩J j G∩J'"),
    ],
    [
        ("green", "D∩K d D'∩L l D'∩L' d^-1 D∩K' k^-1 D∩K"),
        ("red", "G∩K g G'∩L l H'∩L' h^-1 H∩K' k^-1 G∩K"),
        ("brown", "C∩G c C'∩G g D∩G' d D'∩G' g^-1 C∩G"),
        ("blue", "G∩L g G'∩K k H'∩K' h^-1 H∩L' l^-1 G∩L"),
        ("pink", "C∩K c C'∩L l C'∩L' c^-1 C∩K' k^-1 C∩K"),
        ("black", "C∩H c C'∩H h D∩H' d D'∩H' h^-1 C∩H"),
    ],
    [
        ("green", "I∩L i I'∩L' l^-1 J'∩L j^-1 J∩L' l^-1 I∩L"),
        ("red", "I∩K i I'∩K' k^-1 J'∩K j^-1 J∩K' k^-1 I∩K"),
        ("brown", "F∩L f F'∩K k F'∩K' f^-1 F∩L' l^-1 F∩L"),
        ("blue", "E∩K e E'∩L l E'∩L' e^-1 E∩K' k^-1 E∩K"),
        ("pink", "E∩J e E'∩I' i^-1 F∩I f F'∩J' j^-1 E∩J"),
        ("black", "E∩I e E'∩J' j^-1 F∩J f F'∩I' i^-1 E∩I"),
    ],
    [
        ("green", "A∩E a A'∩E e B∩E' b B'∩E' e^-1 A∩E"),
        ("red", "B∩C b B'∩D d B'∩D' b^-1 B∩C' c^-1 B∩C"),
        ("brown", "A∩C a A'∩D d A'∩D' a^-1 A∩C' c^-1 A∩C"),
        ("blue", "A∩F a A'∩F f B∩F' b B'∩F' f^-1 A∩F"),
        ("pink", "C∩E c C'∩F f D∩F' d D'∩E' e^-1 C∩E"),
        ("black", "C∩F' c C'∩E' e^-1 D∩E d D'∩F f C∩F'"),
    ],
];

pub const COLOURS_1011: [[(&str, &str); 6]; 4] = [
    [
        ("green", "A∩H a A'∩G' g^-1 B∩G b B'∩H' h^-1 A∩H"),
        ("red", "A∩J a A'∩J j B'∩J' b^-1 B∩J' j^-1 A∩J"),
        ("brown", "A∩G a A'∩H' h^-1 B∩H b B'∩G' g^-1 A∩G"),
        ("blue", "A∩I a A'∩I i B'∩I' b^-1 B∩I' i^-1 A∩I"),
        ("pink", "G∩I g G'∩J' j^-1 G'∩J g^-1 G∩I' i^-1 G∩I"),
        ("black", "H∩J h H'∩I' i^-1 H'∩I h^-1 H∩J' j^-1 H∩J"),
    ],
    [
        ("green", "D∩K d D'∩L l D'∩L' d^-1 D∩K' k^-1 D∩K"),
        ("red", "G∩K g G'∩L' l^-1 H'∩L h^-1 H∩K' k^-1 G∩K"),
        ("brown", "C∩G c C'∩G g D∩G' d D'∩G' g^-1 C∩G"),
        ("blue", "C∩H c C'∩H h D∩H' d D'∩H' h^-1 C∩H"),
        ("pink", "C∩K c C'∩L l C'∩L' c^-1 C∩K' k^-1 C∩K"),
        ("black", "G∩L g G'∩K' k^-1 H'∩K h^-1 H∩L' l^-1 G∩L"),
    ],
    [
        ("green", "I∩L i I'∩L l J'∩L' j^-1 J∩L' l^-1 I∩L"),
        ("red", "I∩K i I'∩K k J'∩K' j^-1 J∩K' k^-1 I∩K"),
        ("brown", "F∩L f F'∩K' k^-1 F'∩K f^-1 F∩L' l^-1 F∩L"),
        ("blue", "E∩K e E'∩L' l^-1 E'∩L e^-1 E∩K' k^-1 E∩K"),
        ("pink", "E∩J e E'∩I' i^-1 F∩I f F'∩J' j^-1 E∩J"),
        ("black", "E∩I e E'∩J' j^-1 F∩J f F'∩I' i^-1 E∩I"),
    ],
    [
        ("green", "A∩E a A'∩E e B∩E' b B'∩E' e^-1 A∩E"),
        ("red", "B∩C b B'∩D d B'∩D' b^-1 B∩C' c^-1 B∩C"),
        ("brown", "A∩C a A'∩D d A'∩D' a^-1 A∩C' c^-1 A∩C"),
        ("blue", "A∩F a A'∩F f B∩F' b B'∩F' f^-1 A∩F"),
        ("pink", "C∩E c C'∩F f D∩F' d D'∩E' e^-1 C∩E"),
        ("black", "C∩F' c C'∩E' e^-1 D∩E d D'∩F f C∩F'"),
    ],
];

/// Codimension-3 orbits of manifold 3: eight faces joined by seven steps.
pub const CODIM3_3: [&str; 12] = [
    "A∩C∩E a A'∩D∩E e B∩C'∩E' b B'∩D'∩E' d^-1 B'∩D∩F' b^-1 B∩C∩F' f^-1 A'∩D'∩F a^-1 A∩C'∩F",
    "A∩C∩G a A'∩D∩G' g^-1 B∩C'∩G b B'∩D'∩G' d^-1 B'∩D∩G' b^-1 B∩C∩G g A'∩D'∩G' a^-1 A∩C'∩G",
    "A∩C∩H a A'∩D∩H' h^-1 B∩C'∩H b B'∩D'∩H' d^-1 B'∩D∩H' b^-1 B∩C∩H h A'∩D'∩H' a^-1 A∩C'∩H",
    "A∩E∩I a A'∩E∩I i B∩F'∩I' b B'∩F'∩I' f^-1 A∩F∩J a A'∩F∩J j B∩E'∩J' b B'∩E'∩J'",
    "A∩E∩J a A'∩E∩J j B∩F'∩J' b B'∩F'∩J' f^-1 A∩F∩I a A'∩F∩I i B∩E'∩I' b B'∩E'∩I'",
    "A∩G∩I a A'∩G'∩I i B∩H∩I' b B'∩H'∩I' h^-1 A∩H∩J a A'∩H'∩J j B∩G∩J' b B'∩G'∩J'",
    "C∩E∩K c C'∩F∩L l C'∩F∩L' c^-1 C∩E∩K' e D'∩E'∩L' d^-1 D∩F'∩K' k^-1 D∩F'∩K d D'∩E'∩L",
    "C∩F'∩K c C'∩E'∩L l C'∩E'∩L' c^-1 C∩F'∩K' f^-1 D'∩F∩L' d^-1 D∩E∩K' k^-1 D∩E∩K d D'∩F∩L",
    "C∩G∩K c C'∩G∩L l C'∩H∩L' c^-1 C∩H∩K' h D'∩H'∩L' d^-1 D∩H'∩K' k^-1 D∩G'∩K d D'∩G'∩L",
    "E∩I∩K e E'∩J'∩L l E'∩I'∩L' e^-1 E∩J∩K' j F'∩J'∩K f^-1 F∩I∩L l F∩J∩L' f F'∩I'∩K'",
    "G∩I∩K g G'∩J'∩L l H'∩I'∩L' h^-1 H∩J∩K' j G'∩J'∩K g^-1 G∩I∩L l H∩J∩L' h H'∩I'∩K'",
    "G∩J'∩K g G'∩I∩L l H'∩J∩L' h^-1 H∩I'∩K' i^-1 G'∩I∩K g^-1 G∩J'∩L l H∩I'∩L' h H'∩J∩K'",
];

/// Identifying maps per pair of 1-handles of manifold 1011, as formulas in
/// x, y, z with `r2 = x²+y²+z²`.
pub const ATTACHING_1011: [(&str, &str); 6] = [
    ("a", "(-x, y, z)"),
    ("c", "(x, y, -z)"),
    ("e", "(-x/r2, -y/r2, -z/r2)"),
    ("g", "(-x/r2, -y/r2, -z/r2)"),
    ("i", "(x, -y, z)"),
    ("k", "(x/r2, y/r2, z/r2)"),
];
