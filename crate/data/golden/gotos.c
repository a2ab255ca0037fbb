int search(int *a, int n, int key)
{
    int i;
    for (i = 0; i < n; i++)
        if (a[i] == key)
            goto found;
    return -1;
found:
    return i;
done:
    ;
}
