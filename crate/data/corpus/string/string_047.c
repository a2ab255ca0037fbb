/* most frequent letter */
int main()
{
    char buf[1000];
    int times[26] = {0}, idx, best = 0;
    scanf("%s", buf);
    for (idx = 0; buf[idx]; idx++)
        if (buf[idx] >= 'a' && buf[idx] <= 'z')
            times[buf[idx] - 'a']++;
    for (idx = 1; idx < 26; idx++)
        if (times[idx] > times[best])
            best = idx;
    printf("%c %d\n", 'a' + best, times[best]);
    return 0;
}
