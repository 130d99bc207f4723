"""Figure tools"""
