int main()
{
    char line[1000], x;
    int cnt = 0, i = 0;
    gets(line);
    for (; line[i]; i++) {
        x = tolower(line[i]);
        if (x == 'a' || x == 'e' || x == 'i' || x == 'o' || x == 'u')
            cnt++;
    }
    printf("%d\n", cnt);
    return 0;
}
