"""Hand-tallied expected values for the bundled fixture corpora.

Every number here was counted manually from the fixture sources before the
tool was written, following the counting rules documented in javamap.parser.
Do not regenerate these from tool output; they are the oracle.
"""

# ---------------------------------------------------------------- minishapes

# Project-level counters (Drawing shapes style corpus, 6 files hand-counted).
MINISHAPES_METRICS = {
    "LOC": 151,   # code lines: Drawable 5, MyShape 50, MyLine 11, MyOval 17, MyRect 28, DrawPanel 40
    "NOP": 4,     # Drawing, Drawing.Shapes (ancestors), .coreElements, .gui
    "NOC": 6,
    "NOA": 8,     # MyShape 5, MyRect 1, DrawPanel 2
    "NOM": 29,    # 1 + 12 + 2 + 3 + 5 + 6
    "NOCo": 15,   # 2 + 2 + 2 + 3 + 3 + 3
    "NOLv": 8,    # MyOval 3, MyRect 4, DrawPanel 1
    "NOIn": 6,
    "NOI": 41,    # MyShape 2, MyLine 8, MyOval 13, MyRect 13, DrawPanel 5
    "NOAc": 87,   # MyShape 26, MyLine 7, MyOval 10, MyRect 18, DrawPanel 26
}

# Per-package counter vectors, keyed by dotted package name.
MINISHAPES_PACKAGE_METRICS = {
    "Drawing": {
        "LOC": 0, "NOC": 0, "NOA": 0, "NOM": 0, "NOCo": 0,
        "NOLv": 0, "NOIn": 0, "NOI": 0, "NOAc": 0,
    },
    "Drawing.Shapes": {
        "LOC": 0, "NOC": 0, "NOA": 0, "NOM": 0, "NOCo": 0,
        "NOLv": 0, "NOIn": 0, "NOI": 0, "NOAc": 0,
    },
    "Drawing.Shapes.coreElements": {
        "LOC": 111, "NOC": 5, "NOA": 6, "NOM": 23, "NOCo": 12,
        "NOLv": 7, "NOIn": 4, "NOI": 36, "NOAc": 61,
    },
    "Drawing.Shapes.gui": {
        "LOC": 40, "NOC": 1, "NOA": 2, "NOM": 6, "NOCo": 3,
        "NOLv": 1, "NOIn": 2, "NOI": 5, "NOAc": 26,
    },
}

# Hand enumeration of explicit extends/implements clauses, in the
# deterministic (subclass, kind, supertype) order the model promises.
MINISHAPES_INHERITANCE = [
    ("Drawing.Shapes.coreElements.MyLine", "MyShape", "extends"),
    ("Drawing.Shapes.coreElements.MyOval", "MyShape", "extends"),
    ("Drawing.Shapes.coreElements.MyRect", "MyShape", "extends"),
    ("Drawing.Shapes.coreElements.MyShape", "Drawable", "implements"),
    ("Drawing.Shapes.gui.DrawPanel", "Panel", "extends"),
    ("Drawing.Shapes.gui.DrawPanel", "ActionListener", "implements"),
]

# Golden structural tree written by hand from the fixture sources:
# package -> class -> (is_interface, superclass, super_interfaces,
#                      attribute names, method (name, param type) signatures).
MINISHAPES_TREE = {
    "Drawing": {},
    "Drawing.Shapes": {},
    "Drawing.Shapes.coreElements": {
        "Drawable": {
            "is_interface": True,
            "superclass": "Object",
            "super_interfaces": [],
            "attributes": [],
            "methods": [("draw", ("Graphics",))],
        },
        "MyLine": {
            "is_interface": False,
            "superclass": "MyShape",
            "super_interfaces": [],
            "attributes": [],
            "methods": [
                ("MyLine", ("int", "int", "int", "int", "java.awt.Color")),
                ("draw", ("Graphics",)),
            ],
        },
        "MyOval": {
            "is_interface": False,
            "superclass": "MyShape",
            "super_interfaces": [],
            "attributes": [],
            "methods": [
                ("MyOval", ("int", "int", "int", "int", "java.awt.Color")),
                ("draw", ("Graphics",)),
                ("originX", ()),
            ],
        },
        "MyRect": {
            "is_interface": False,
            "superclass": "MyShape",
            "super_interfaces": [],
            "attributes": ["instances"],
            "methods": [
                ("MyRect", ("int", "int", "int", "int", "java.awt.Color")),
                ("draw", ("Graphics",)),
                ("stackedArea", ("int",)),
                ("area", ()),
                ("getInstances", ()),
            ],
        },
        "MyShape": {
            "is_interface": False,
            "superclass": "Object",
            "super_interfaces": ["Drawable"],
            "attributes": ["x1", "y1", "x2", "y2", "color"],
            "methods": [
                ("MyShape", ("int", "int", "int", "int", "Color")),
                ("getX1", ()),
                ("setX1", ("int",)),
                ("getY1", ()),
                ("setY1", ("int",)),
                ("getX2", ()),
                ("setX2", ("int",)),
                ("getY2", ()),
                ("setY2", ("int",)),
                ("getColor", ()),
                ("setColor", ("Color",)),
                ("draw", ("Graphics",)),
            ],
        },
    },
    "Drawing.Shapes.gui": {
        "DrawPanel": {
            "is_interface": False,
            "superclass": "Panel",
            "super_interfaces": ["ActionListener"],
            "attributes": ["shapes", "count"],
            "methods": [
                ("DrawPanel", ("int",)),
                ("addShape", ("MyShape",)),
                ("addShape", ("int", "int", "int", "int")),
                ("paint", ("Graphics",)),
                ("actionPerformed", ("ActionEvent",)),
                ("getCount", ()),
            ],
        },
    },
}

# Per-class record counts (invocations, accesses, assignments, locals,
# comments) used to pin the extraction rules file by file.
MINISHAPES_CLASS_RECORDS = {
    "Drawing.Shapes.coreElements.Drawable": {"NOI": 0, "NOAc": 0, "asgn": 0, "NOLv": 0, "NOCo": 2},
    "Drawing.Shapes.coreElements.MyShape": {"NOI": 2, "NOAc": 26, "asgn": 10, "NOLv": 0, "NOCo": 2},
    "Drawing.Shapes.coreElements.MyLine": {"NOI": 8, "NOAc": 7, "asgn": 0, "NOLv": 0, "NOCo": 2},
    "Drawing.Shapes.coreElements.MyOval": {"NOI": 13, "NOAc": 10, "asgn": 0, "NOLv": 3, "NOCo": 3},
    "Drawing.Shapes.coreElements.MyRect": {"NOI": 13, "NOAc": 18, "asgn": 3, "NOLv": 4, "NOCo": 3},
    "Drawing.Shapes.gui.DrawPanel": {"NOI": 5, "NOAc": 26, "asgn": 5, "NOLv": 1, "NOCo": 3},
}

# ---------------------------------------------------------------- basethread

BASETHREAD_METRICS = {
    "LOC": 9, "NOP": 5, "NOC": 1, "NOA": 0, "NOM": 2, "NOCo": 1,
    "NOLv": 0, "NOIn": 0, "NOI": 2, "NOAc": 0,
}

BASETHREAD_PACKAGES = [
    "ubc",
    "ubc.midp",
    "ubc.midp.mobilephoto",
    "ubc.midp.mobilephoto.core",
    "ubc.midp.mobilephoto.core.threads",
]
