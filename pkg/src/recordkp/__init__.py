"""Exact knapsack solver."""
