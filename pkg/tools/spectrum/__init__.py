"""Chaoticity proxy tools"""
