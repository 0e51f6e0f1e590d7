from src.generators import (complete_binary_tree, complete_graph, cycle_graph, erdos_renyi_connected, path_graph,
                            random_tree, star_graph, watts_strogatz)

GENERATORS_MAP = {
    "tree": random_tree,
    "er": erdos_renyi_connected,
    "ws": watts_strogatz,
    "path": path_graph,
    "star": star_graph,
    "complete": complete_graph,
    "cycle": cycle_graph,
    "binary": complete_binary_tree,
}

# генераторы, которые принимают seed вторым аргументом
SEEDED_GENERATORS = {"tree", "er", "ws"}

GENERATOR_PARAMS = {
    "tree": "",
    "er": "p=2*ln(n)/n",
    "ws": "k=4, p=0.1",
    "path": "",
    "star": "",
    "complete": "",
    "cycle": "",
    "binary": "",
}

METHODS = ["auto", "path", "tree", "graph", "star"]

DEFAULT_CONFIG_FILE = "bench_config.json"
