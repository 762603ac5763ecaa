"""
Cross-image attention on feature maps
=====================================

Shows what the co-attention block computes, independent of any trained
network: each location in one feature map attends over every location
of the other map, and the attended summary is concatenated back onto
the querying map. The attention weights form a probability distribution
per query location, which is what makes them readable as a soft
correspondence.
"""
import numpy as np
import torch

from cyws.coattention import (
    CoAttention,
    box_query_locations,
    extract_attention_map,
    heatmap_to_image,
)
from cyws.geometry import Bbox

torch.manual_seed(0)

# Two small feature maps standing in for encoder outputs. The key map
# hides a copy of one query vector at location (2, 3): attention from
# that query should concentrate there.
channels, grid = 8, 6
fq = torch.randn(channels, grid, grid)
fk = torch.randn(channels, grid, grid) * 0.1
fk[:, 2, 3] = fq[:, 1, 1] * 4.0

module = CoAttention(channels=channels, logit_scale=1.0)
with torch.no_grad():
    module.query_proj.weight.copy_(torch.eye(channels).reshape(channels, channels, 1, 1))
    module.key_proj.weight.copy_(torch.eye(channels).reshape(channels, channels, 1, 1))

# --- Attention rows are probability distributions ---------------------------
attn = module.compute_attention(fq, fk).detach()
row_sums = attn.sum(dim=(-1, -2))
print("attention tensor:", tuple(attn.shape), "(query row, query col, key row, key col)")
print(f"row sums: min {row_sums.min():.6f}  max {row_sums.max():.6f}")

# --- The planted correspondence stands out ----------------------------------
peak = attn[1, 1].argmax()
print("query (1,1) attends hardest to key", divmod(int(peak), grid), "(planted at (2, 3))")

# --- The attended summary feeds the detector ---------------------------------
g1, g2 = module(fq, fk)
print("co-attended maps:", tuple(g1.shape), "= input channels doubled")

# --- Pass-through ablation ----------------------------------------------------
# With attention disabled the block concatenates the raw other-image map,
# which is only meaningful when the two images are already registered.
ablation = CoAttention(channels=channels, mode="noam")
n1, _ = ablation(fq, fk)
assert torch.equal(n1[channels:], fk)
print("pass-through mode concatenates the raw key map")

# --- Query a region and render the attention as an image ---------------------
query = Bbox(8.0, 8.0, 24.0, 24.0)  # in pixels of a 48x48 input
cells = box_query_locations(query, grid, grid, image_h=48, image_w=48)
heat = extract_attention_map(attn, cells)
image = heatmap_to_image(heat)
print("query cells:", cells)
print("heat grid:\n", np.array2string(image, max_line_width=120))
